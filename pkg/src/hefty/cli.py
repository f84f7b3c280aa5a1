"""Command-line front end.

Every command reads an instance file (``--input`` or standard input), prints a
JSON report, and exits with 0 on success, 1 when a checked bound fails, and 2
on bad input or degenerate data.  ``gen`` writes instance files; ``render``
writes SVG.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from fractions import Fraction
from math import comb

from hefty import __version__
from hefty.applications import (
    enumerate_chambers, eulerian, facet_counts, gen_hexmesh, heft_census, hemisphere_chambers,
    hypersimplex_identity_check, hypersimplex_relative_volume, level_maxima, level_minima,
    line_entry_count, order_n_mosaic_cells, cells_containing, random_arrangement,
    random_hemispheres, regular_polygon_normals, worpitzky_check,
)
from hefty.euclidean import (
    PointSet, StabilizationError, covering_count, enumerate_hefty, gen_pentagon, gen_radial,
    heft_table, incident_at_most_k, local_covering_profile, random_generic_set, tukey_depth,
)
from hefty.io import (
    REPORT_SCHEMA, Instance, InputError, digest, format_instance, parse_instance, to_json,
)
from hefty.numeric import GeometryError, point, scalar
from hefty.spherical import (
    SphericalPoint, SphericalSet, covering_count_sphere, is_k_balanced, random_balanced_set,
)
from hefty.svg import render_svg
from hefty.weighted import WeightedPoint, WeightedSet, covering_count_weighted, enumerate_weighted

log = logging.getLogger("hefty")

COMMANDS = ("enumerate", "cover", "localcover", "khull", "kfacets", "entries", "levels",
            "chambers", "hemichambers", "hypersimplex", "worpitzky", "mosaic", "gen", "render")
GEN_KINDS = ("radial", "pentagon", "random", "weighted", "hexmesh", "arrangement",
             "balanced", "polygon", "hemispheres")


class CheckFailed(Exception):
    pass


def _simplex_json(s):
    return {"vertices": list(s.vertices), "heft": s.heft, "enclosed": sorted(s.enclosed)}


def _parse_vector(text: str):
    try:
        return point(*[scalar(t) for t in text.replace(" ", "").split(",")])
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not an exact vector: {text!r}") from None


def _check(name, ok, **detail):
    return {"name": name, "ok": bool(ok), **detail}


def _report(command, inst, params, results, checks=(), witnesses=()):
    checks = list(checks)
    verdict = "INFO" if not checks else ("PASS" if all(c["ok"] for c in checks) else "FAIL")
    inputs = None
    if inst is not None:
        data = inst.data
        inputs = {"mode": inst.mode, "d": inst.d, "size": len(data), "digest": digest(inst),
                  "label": inst.label}
    return {
        "schema": REPORT_SCHEMA,
        "version": __version__,
        "command": command,
        "inputs": inputs,
        "params": {k: v for k, v in params.items() if v is not None},
        "results": results,
        "checks": checks,
        "verdict": verdict,
        "witnesses": list(witnesses),
    }


def _need(inst: Instance, *modes):
    if inst.mode not in modes:
        raise InputError(f"this command needs mode {' or '.join(modes)}, got {inst.mode}")


def _need_k(args):
    if args.k is None:
        raise InputError("--k is required")
    if args.k < 0:
        raise InputError("--k must be non-negative")
    return args.k


# ---------------------------------------------------------------- commands

def cmd_enumerate(args, inst):
    _need(inst, "euclidean", "weighted", "spherical")
    data = inst.data
    if inst.mode == "euclidean":
        table = heft_table(data, parallel=args.parallel)
        census, total = table.counts(), len(table.hefts)
        pick = (lambda k: enumerate_hefty(data, k))
        n, d = data.n, data.d
    elif inst.mode == "weighted":
        census, total = data.table.counts(), len(data.table.hefts)
        pick = (lambda k: enumerate_weighted(data, k))
        n, d = data.n, data.d
    else:
        census = heft_census_of(data.table)
        total = len(data.table)
        pick = (lambda k: [s for s in data.table if s.heft == k])
        n, d = data.n, data.d
    results = {"census": {str(k): v for k, v in sorted(census.items())}, "subsets": total}
    witnesses = []
    if args.k is not None:
        found = pick(args.k)
        results["k"] = args.k
        results["count"] = len(found)
        witnesses = [_simplex_json(s) for s in found]
    checks = [_check("every subset has one heft", total == comb(n, d + 1),
                     expected=comb(n, d + 1), observed=total)]
    return _report("enumerate", inst, {"k": args.k}, results, checks, witnesses)


def heft_census_of(simplices):
    out = {}
    for s in simplices:
        out[s.heft] = out.get(s.heft, 0) + 1
    return out


def _deepest_vertex(ps: PointSet) -> tuple[int, int]:
    best = (-1, -1)
    for i in range(ps.n):
        rest, _ = ps.without([i])
        depth = tukey_depth(rest, ps[i])
        if depth > best[1]:
            best = (i, depth)
    return best


def _auto_query(ps: PointSet, k: int, vertex: int):
    """A point next to ``vertex`` that avoids every k-hefty simplex boundary."""
    v = ps[vertex]
    nearest = min(max(abs(a - b) for a, b in zip(p, v)) for i, p in enumerate(ps) if i != vertex)
    for step in range(1, 40):
        u = tuple(Fraction((37 * (j + 1) * step) % 101 + 1) for j in range(ps.d))
        q = tuple(a + nearest * x / 4096 for a, x in zip(v, u))
        rep = covering_count(ps, k, q)
        if not rep.boundary_flag:
            return q, rep
    raise GeometryError("could not place a generic query next to the vertex")


def cmd_cover(args, inst):
    k = _need_k(args)
    if args.query is None:
        raise InputError("--query is required (coordinates or auto-center)")
    data = inst.data
    params = {"k": k, "query": args.query}
    if inst.mode == "spherical":
        q = SphericalPoint(_parse_vector(args.query))
        rep = covering_count_sphere(data, k, q)
        expected = comb(data.d + k, data.d)
        balanced = is_k_balanced(data.points, k)
        results = {"count": rep.count, "expected": expected, "balanced": balanced,
                   "boundary_flag": rep.boundary_flag}
        checks = []
        if balanced and not rep.boundary_flag:
            checks.append(_check("covering number on the sphere", rep.count == expected,
                                 expected=expected, observed=rep.count))
        return _report("cover", inst, params, results, checks, [_simplex_json(s) for s in rep.witnesses])
    _need(inst, "euclidean", "weighted")
    ps = data if inst.mode == "euclidean" else data.locations
    d = ps.d
    expected = comb(d + k, d)
    results = {}
    checks = []
    if args.query == "auto-center":
        if inst.mode != "euclidean":
            raise InputError("auto-center is only available for unweighted sets")
        vertex, vdepth = _deepest_vertex(ps)
        prof = local_covering_profile(ps, k, vertex)
        local_expected = comb(d + k - 1, d - 1)
        q, rep = _auto_query(ps, k, vertex)
        results["vertex"] = vertex
        results["vertex_depth"] = vdepth
        results["local_count"] = prof.count
        results["local_counts"] = prof.counts
        results["local_expected"] = local_expected
        checks.append(_check("local count stabilized", prof.count is not None, observed=prof.counts))
        if prof.count is not None:
            checks.append(_check("local covering bound", prof.count <= local_expected,
                                 expected=local_expected, observed=prof.count))
    else:
        q = _parse_vector(args.query)
        rep = covering_count(ps, k, q) if inst.mode == "euclidean" else covering_count_weighted(data, k, q)
    depth = tukey_depth(ps, q)
    in_hull = depth >= k + 1
    results.update({"query": list(q), "count": rep.count, "expected": expected, "depth": depth,
                    "in_hull": in_hull, "boundary_flag": rep.boundary_flag})
    if inst.mode == "euclidean" and not rep.boundary_flag:
        if in_hull:
            checks.append(_check("covering number inside the k-hull", rep.count == expected,
                                 expected=expected, observed=rep.count))
        else:
            checks.append(_check("strictly fewer outside the k-hull", rep.count < expected,
                                 expected=f"< {expected}", observed=rep.count))
    return _report("cover", inst, params, results, checks, [_simplex_json(s) for s in rep.witnesses])


def cmd_localcover(args, inst):
    _need(inst, "euclidean", "weighted")
    k = _need_k(args)
    ps = inst.data if inst.mode == "euclidean" else inst.data.locations
    vertex = args.vertex if args.vertex is not None else _deepest_vertex(ps)[0]
    if inst.mode == "weighted":
        simplices = [s for h in range(k + 1) for s in enumerate_weighted(inst.data, h)]
        expected = comb(ps.d + k, ps.d)
        name = "heft at most k around a vertex"
    else:
        simplices = None
        expected = comb(ps.d + k - 1, ps.d - 1)
        name = "local covering bound"
    prof = local_covering_profile(ps, k, vertex, simplices=simplices)
    if not prof.stable:
        raise StabilizationError(f"local count at vertex {vertex} did not stabilize", prof.counts)
    observed = max(prof.counts)
    results = {"vertex": vertex, "counts": prof.counts, "steps": prof.steps, "count": prof.count,
               "expected": expected}
    checks = [_check(name, observed <= expected, expected=expected, observed=observed)]
    if inst.mode == "euclidean":
        inc = incident_at_most_k(ps, k, vertex)
        results.update({"incident_at_most_k": inc.incident, "incident_local": inc.local,
                        "incident_lower_bound": inc.lower_bound,
                        "conjectured_bound": (ps.d + 1) * comb(ps.d + k, k)})
        if inc.lower_bound is not None:
            checks.append(_check("incident simplices of heft at most k", inc.ok,
                                 expected=f">= {inc.lower_bound}", observed=inc.incident))
    return _report("localcover", inst, {"k": k, "vertex": vertex}, results, checks)


def cmd_khull(args, inst):
    _need(inst, "euclidean")
    k = _need_k(args)
    if args.query is None:
        raise InputError("--query is required")
    q = _parse_vector(args.query)
    depth = tukey_depth(inst.data, q)
    results = {"query": list(q), "depth": depth, "member": depth >= k + 1}
    return _report("khull", inst, {"k": k, "query": args.query}, results)


def cmd_kfacets(args, inst):
    _need(inst, "euclidean")
    k = _need_k(args)
    ps = inst.data
    counts = facet_counts(ps, k)
    total = sum(counts)
    results = {"counts": counts, "sum": total, "convention": "oriented"}
    checks = []
    if ps.d == 2 and 3 * k <= ps.n - 3:
        bound = (k + 1) * ps.n
        results["slack"] = bound - total
        checks.append(_check("at most (k+1)n facets of order at most k", total <= bound,
                             expected=f"<= {bound}", observed=total))
    return _report("kfacets", inst, {"k": k}, results, checks)


def cmd_entries(args, inst):
    _need(inst, "euclidean")
    k = _need_k(args)
    ps = inst.data
    rng = random.Random(args.seed)
    origin = _parse_vector(args.query) if args.query else tuple(Fraction(rng.randint(-100, 100), 7) for _ in range(ps.d))
    direction = (_parse_vector(args.direction) if args.direction
                 else tuple(Fraction(rng.randint(-100, 100)) or Fraction(1) for _ in range(ps.d)))
    fwd = line_entry_count(ps, k, origin, direction)
    bwd = line_entry_count(ps, k, origin, tuple(-x for x in direction))
    bound = comb(ps.d + k - 1, ps.d - 1)
    results = {"origin": list(origin), "direction": list(direction), "forward": fwd,
               "backward": bwd, "bound": bound}
    checks = [
        _check("forward entries", fwd <= bound, expected=f"<= {bound}", observed=fwd),
        _check("backward entries", bwd <= bound, expected=f"<= {bound}", observed=bwd),
        _check("both directions", fwd + bwd <= 2 * bound, expected=f"<= {2 * bound}", observed=fwd + bwd),
    ]
    return _report("entries", inst, {"k": k}, results, checks)


def cmd_levels(args, inst):
    _need(inst, "arrangement", "halfspaces")
    k = _need_k(args)
    arr = inst.data
    d = arr.d
    minima = level_minima(arr, k)
    maxima = level_maxima(arr, k)
    results = {"minima": [list(x) for x in minima], "maxima": [list(x) for x in maxima]}
    checks = [
        _check("local minima", len(minima) <= comb(d + k, d), expected=f"<= {comb(d + k, d)}",
               observed=len(minima)),
        _check("local maxima", len(maxima) <= comb(k, d), expected=f"<= {comb(k, d)}",
               observed=len(maxima)),
    ]
    return _report("levels", inst, {"k": k}, results, checks)


def cmd_chambers(args, inst):
    _need(inst, "arrangement", "halfspaces")
    arr = inst.data
    chambers = enumerate_chambers(arr, args.box)
    census = heft_census(chambers)
    m = min(census)
    bound = comb(arr.d + m, arr.d)
    results = {
        "chambers": len(chambers),
        "census": {str(h): c for h, c in census.items()},
        "min_heft": m,
        "min_heft_chambers": census[m],
        "bound": bound,
        "bounded_min_heft": sum(1 for c in chambers if c.heft == m and c.bounded),
    }
    witnesses = [{"signs": "".join("+" if s > 0 else "-" for s in c.sign_vector), "heft": c.heft,
                  "bounded": c.bounded, "point": list(c.witness_point)}
                 for c in chambers if c.heft == m]
    checks = [_check("minimum-heft chambers", census[m] <= bound, expected=f"<= {bound}",
                     observed=census[m])]
    return _report("chambers", inst, {"box": args.box}, results, checks, witnesses)


def cmd_hemichambers(args, inst):
    _need(inst, "spherical")
    cen = hemisphere_chambers(inst.data.points, args.k)
    results = {"census": {str(h): c for h, c in cen.census.items()}, "min_heft": cen.min_heft,
               "count": cen.min_count, "general_bound": cen.general_bound,
               "restricted_bound": cen.restricted_bound}
    checks = [_check("general bound", cen.min_count <= cen.general_bound,
                     expected=f"<= {cen.general_bound}", observed=cen.min_count)]
    if cen.restricted_bound is not None:
        checks.append(_check("bound with many hemispheres", cen.min_count <= cen.restricted_bound,
                             expected=f"<= {cen.restricted_bound}", observed=cen.min_count))
    return _report("hemichambers", inst, {"k": args.k}, results, checks)


def cmd_hypersimplex(args, inst):
    if args.d is None or args.d < 1:
        raise InputError("--d >= 1 is required")
    d = args.d
    table = eulerian(d)
    rows = [{"p": p, "volume": hypersimplex_relative_volume(d, p), "eulerian": table[p - 1]}
            for p in range(1, d + 1)]
    checks = [_check(f"volume equals Eulerian number (p={r['p']})", r["volume"] == r["eulerian"],
                     expected=r["eulerian"], observed=r["volume"]) for r in rows]
    return _report("hypersimplex", None, {"d": d}, {"rows": rows}, checks)


def cmd_worpitzky(args, inst):
    if args.d is None or args.n is None or args.d < 1 or args.n < 1:
        raise InputError("--d >= 1 and --n >= 1 are required")
    w = worpitzky_check(args.d, args.n)
    h = hypersimplex_identity_check(args.d, args.n)
    results = {"eulerian_sum": w.lhs, "hypersimplex_sum": h.lhs, "power": w.rhs}
    checks = [_check("Eulerian sum", w.ok, expected=w.rhs, observed=w.lhs),
              _check("hypersimplex sum", h.ok, expected=h.rhs, observed=h.lhs)]
    return _report("worpitzky", None, {"d": args.d, "n": args.n}, results, checks)


def cmd_mosaic(args, inst):
    _need(inst, "euclidean")
    if args.n is None or args.n < 1:
        raise InputError("--n >= 1 (mosaic order) is required")
    ps = inst.data
    cells = order_n_mosaic_cells(ps, args.n)
    per_p = {}
    for c in cells:
        per_p[str(c.p)] = per_p.get(str(c.p), 0) + 1
    results = {"cells": len(cells), "cells_by_p": per_p}
    checks = []
    witnesses = []
    if args.query:
        q = _parse_vector(args.query)
        inside, boundary = cells_containing(cells, q)
        depth = tukey_depth(ps, q)
        results.update({"query": list(q), "containing": len(inside), "boundary_flag": boundary,
                        "depth": depth})
        witnesses = [{"p": c.p, "source": _simplex_json(c.source), "vertices": [list(v) for v in c.vertices]}
                     for c in inside]
        if depth >= args.n and not boundary:
            checks.append(_check("deep query in exactly one cell", len(inside) == 1,
                                 expected=1, observed=len(inside)))
    return _report("mosaic", inst, {"n": args.n, "query": args.query}, results, checks, witnesses)


def cmd_gen(args):
    kind = args.kind
    seed = args.seed
    if kind == "radial":
        d = args.d or 2
        data, mode = gen_radial(d, args.n or 3, seed), "euclidean"
    elif kind == "pentagon":
        d, data, mode = 2, gen_pentagon(), "euclidean"
    elif kind == "random":
        d = args.d or 2
        data, mode = random_generic_set(d, args.n or 12, seed), "euclidean"
    elif kind == "weighted":
        d = args.d or 2
        base = random_generic_set(d, args.n or 12, seed)
        rng = random.Random(seed)
        data = WeightedSet([WeightedPoint(p, rng.randint(-2000, 2000)) for p in base],
                           f"weighted d={d} n={base.n} seed={seed}")
        data.table
        mode = "weighted"
    elif kind == "hexmesh":
        d = args.d or 2
        data, mode = gen_hexmesh(d, args.k or 1), "arrangement"
    elif kind == "arrangement":
        d = args.d or 2
        data, mode = random_arrangement(d, args.n or 6, seed), "arrangement"
    elif kind == "balanced":
        d = args.d or 2
        data, mode = random_balanced_set(d, args.n or 12, args.k or 0, seed), "spherical"
    elif kind == "polygon":
        d, mode = 1, "spherical"
        data = SphericalSet(regular_polygon_normals(args.n or 5), label=f"regular {args.n or 5}-gon")
    elif kind == "hemispheres":
        d, mode = 1, "spherical"
        n = args.n or 20
        data = SphericalSet(random_hemispheres(n, args.k or 1, seed),
                            label=f"hemispheres n={n} seed={seed}")
    else:
        raise InputError(f"unknown generator {kind!r}")
    return format_instance(Instance(mode, d, data))


def cmd_render(args, inst):
    q = _parse_vector(args.query) if args.query else None
    return render_svg(inst.data, args.k, q)


HANDLERS = {
    "enumerate": cmd_enumerate, "cover": cmd_cover, "localcover": cmd_localcover,
    "khull": cmd_khull, "kfacets": cmd_kfacets, "entries": cmd_entries, "levels": cmd_levels,
    "chambers": cmd_chambers, "hemichambers": cmd_hemichambers, "hypersimplex": cmd_hypersimplex,
    "worpitzky": cmd_worpitzky, "mosaic": cmd_mosaic,
}
NO_INPUT = {"hypersimplex", "worpitzky", "gen"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hefty", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--k", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--query", help="comma separated exact coordinates, or auto-center")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--input", help="instance file (default: standard input)")
    common.add_argument("--output", help="write here instead of standard output")
    common.add_argument("--parallel", action="store_true", help="split enumeration across threads")
    helps = {
        "enumerate": "list simplices of a given heft", "cover": "covering count at a query",
        "localcover": "covering count next to a vertex", "khull": "halfspace depth and k-hull membership",
        "kfacets": "oriented k-facet counts", "entries": "k-facets entered by a directed line",
        "levels": "local extrema of a k-level", "chambers": "chamber heft census",
        "hemichambers": "hemisphere chamber census", "hypersimplex": "hypersimplex volumes",
        "worpitzky": "Worpitzky and hypersimplex identities", "mosaic": "order-n Delaunay mosaic cells",
        "gen": "generate an instance file", "render": "SVG picture of a planar instance",
    }
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common], help=helps[name])
        if name == "gen":
            p.add_argument("kind", choices=GEN_KINDS)
        if name == "localcover":
            p.add_argument("--vertex", type=int)
        if name == "entries":
            p.add_argument("--direction", help="comma separated direction of the line")
        if name == "chambers":
            p.add_argument("--box", type=Fraction, help="half-width of the bounding box")
    return parser


def _emit(text: str, path):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "gen":
            _emit(cmd_gen(args), args.output)
            return 0
        inst = None
        if args.command not in NO_INPUT:
            if args.input:
                with open(args.input, encoding="utf-8") as fh:
                    text = fh.read()
            else:
                text = sys.stdin.read()
            inst = parse_instance(text)
        if args.command == "render":
            _emit(cmd_render(args, inst), args.output)
            return 0
        report = HANDLERS[args.command](args, inst)
    except (GeometryError, OSError) as exc:
        witness = list(getattr(exc, "witness", ()) or ())
        err = {"schema": REPORT_SCHEMA, "command": args.command, "error": str(exc),
               "kind": type(exc).__name__, "witness": witness}
        sys.stdout.write(to_json(err))
        return 2
    _emit(to_json(report), args.output)
    return 1 if report["verdict"] == "FAIL" else 0


if __name__ == "__main__":
    sys.exit(main())
