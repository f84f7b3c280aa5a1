"""k-hefty simplices of finite point sets in R^d.

A d-simplex spanned by points of the set is k-hefty when exactly k other points
of the set lie strictly inside its circumscribed sphere.  Enumeration is a full
scan over all (d+1)-subsets through :mod:`hefty._kernels`; single-simplex
queries (:func:`heft`) go through the lifted determinant of :mod:`hefty.numeric`
so the two routes can be checked against each other.
"""

from __future__ import annotations

import logging
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb, lcm
from typing import Iterable, Sequence

from hefty import _kernels
from hefty.numeric import (
    DegenerateError, DimensionMismatch, GeometryError, Sign,
    determinant, dot, in_sphere, integerize, orientation, point, sub,
)

log = logging.getLogger(__name__)

__all__ = [
    "PointSet", "HeftySimplex", "CoverReport", "Witness", "HeftTable", "SplitCheck",
    "NonGenericError", "StabilizationError", "LocalCoverage",
    "check_generic", "heft", "heft_table", "enumerate_hefty", "covering_count",
    "local_covering_count", "local_covering_profile", "tukey_depth", "tukey_depths",
    "khull_member", "gen_radial", "radial_compositions", "gen_pentagon", "random_generic_set",
    "random_queries", "cover_split_check", "fixed_enclosed_disjointness",
    "interiors_disjoint", "scaled_integer_query", "IncidentCount", "incident_at_most_k",
]


class NonGenericError(DegenerateError):
    """The point set (or a query) violates general position; see ``witness``."""


class StabilizationError(GeometryError):
    """The local covering walk did not settle on a common count."""

    def __init__(self, message, counts=()):
        super().__init__(message)
        self.counts = tuple(counts)


@dataclass(frozen=True)
class Witness:
    """A violating index tuple: ``kind`` is "hyperplane" (d+1 points) or "sphere" (d+2)."""

    kind: str
    indices: tuple


@dataclass(frozen=True)
class PointSet:
    points: tuple
    label: str = ""

    def __post_init__(self):
        pts = tuple(point(p) for p in self.points)
        if not pts:
            raise GeometryError("empty point set")
        d = len(pts[0])
        for p in pts:
            if len(p) != d:
                raise DimensionMismatch(f"mixed dimensions {d} and {len(p)}")
        seen = {}
        for i, p in enumerate(pts):
            if p in seen:
                raise GeometryError(f"duplicate points {seen[p]} and {i}")
            seen[p] = i
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_rows(cls, rows, label=""):
        return cls(tuple(point(r) for r in rows), label)

    @property
    def d(self) -> int:
        return len(self.points[0])

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    @cached_property
    def integer_coords(self) -> tuple[int, list[list[int]]]:
        """(scale, coords): the set multiplied by the lcm of its denominators."""
        return integerize(self.points)

    def without(self, indices: Iterable[int]) -> tuple["PointSet", list[int]]:
        """Copy with ``indices`` removed, plus the map new index -> old index."""
        drop = set(indices)
        keep = [i for i in range(self.n) if i not in drop]
        return PointSet(tuple(self.points[i] for i in keep), self.label), keep


@dataclass(frozen=True, order=True)
class HeftySimplex:
    vertices: tuple
    heft: int = field(compare=False)
    enclosed: frozenset = field(compare=False)


@dataclass
class CoverReport:
    query: tuple
    k: int
    count: int
    witnesses: list
    boundary_flag: bool

    @property
    def expected(self) -> int:
        return comb(len(self.query) + self.k, self.k)


@dataclass(frozen=True)
class HeftTable:
    """Heft and enclosed bitmask for every (d+1)-subset, in lexicographic order."""

    n: int
    d: int
    hefts: tuple
    masks: tuple

    @cached_property
    def simplices(self) -> tuple:
        return tuple(combinations(range(self.n), self.d + 1))

    def with_heft(self, k: int) -> list[HeftySimplex]:
        cache = self.__dict__.setdefault("_by_heft", {})
        if k not in cache:
            cache[k] = tuple(HeftySimplex(verts, h, _mask_to_set(m))
                             for verts, h, m in zip(self.simplices, self.hefts, self.masks) if h == k)
        return list(cache[k])

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for h in self.hefts:
            out[h] = out.get(h, 0) + 1
        return out


def _mask_to_set(mask: int) -> frozenset:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _kernel_error(exc: _kernels.DegenerateInput, what="point set"):
    kind = "hyperplane" if exc.kind == "flat" else exc.kind
    return NonGenericError(f"{what} is not generic ({kind})", exc.witness)


def _compute_table(ps: PointSet, weights=None, parallel=False) -> HeftTable:
    _, coords = ps.integer_coords
    n, d = ps.n, ps.d
    if n < d + 1:
        return HeftTable(n, d, (), ())
    try:
        if parallel and n > d + 2:
            # ranges of first index release the GIL in the compiled backend
            bounds = list(range(0, n - d + 1, max(1, (n - d) // 8))) + [n - d]
            ranges = [(lo, hi) for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
            with ThreadPoolExecutor() as pool:
                parts = list(pool.map(
                    lambda r: _kernels.heft_table(coords, weights, r[0], r[1]), ranges))
            hefts = [h for p in parts for h in p[0]]
            masks = [m for p in parts for m in p[1]]
        else:
            hefts, masks = _kernels.heft_table(coords, weights)
    except _kernels.DegenerateInput as exc:
        raise _kernel_error(exc) from None
    return HeftTable(n, d, tuple(hefts), tuple(masks))


def heft_table(ps: PointSet, parallel: bool = False) -> HeftTable:
    """Full heft table of ``ps`` (cached on the set); raises NonGenericError."""
    cache = ps.__dict__.setdefault("_heft_tables", {})
    if None not in cache:
        cache[None] = _compute_table(ps, parallel=parallel)
    return cache[None]


def check_generic(ps: PointSet) -> Witness | None:
    """None when generic, else the first violating tuple in scan order.

    Subsets are visited lexicographically; for each (d+1)-subset its flatness
    is tested before any held-out point is tested against its circumsphere.
    """
    try:
        heft_table(ps)
    except NonGenericError as exc:
        kind = "hyperplane" if len(exc.witness) == ps.d + 1 else "sphere"
        return Witness(kind, exc.witness)
    return None


def _validate_indices(ps: PointSet, vertex_indices) -> tuple:
    idx = tuple(sorted(int(i) for i in vertex_indices))
    if len(idx) != ps.d + 1 or len(set(idx)) != len(idx):
        raise GeometryError(f"need {ps.d + 1} distinct indices, got {vertex_indices!r}")
    if idx[0] < 0 or idx[-1] >= ps.n:
        raise IndexError(f"vertex index out of range 0..{ps.n - 1}: {idx}")
    return idx


def heft(ps: PointSet, vertex_indices) -> HeftySimplex:
    """Heft of one simplex via the lifted in-sphere determinant."""
    idx = _validate_indices(ps, vertex_indices)
    simplex = [ps[i] for i in idx]
    if orientation(simplex) == Sign.ZERO:
        raise NonGenericError("degenerate simplex", idx)
    enclosed = set()
    for j in range(ps.n):
        if j in idx:
            continue
        s = in_sphere(simplex, ps[j])
        if s == Sign.ZERO:
            raise NonGenericError("point on circumsphere", tuple(sorted(idx + (j,))))
        if s == Sign.POSITIVE:
            enclosed.add(j)
    return HeftySimplex(idx, len(enclosed), frozenset(enclosed))


def enumerate_hefty(ps: PointSet, k: int, parallel: bool = False) -> list[HeftySimplex]:
    """All k-hefty simplices, sorted by vertex indices."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return heft_table(ps, parallel=parallel).with_heft(k)


def scaled_integer_query(ps: PointSet, query) -> tuple[list[list[int]], list[int]]:
    """Integer coordinates of the set and of ``query`` under one common scale."""
    scale, coords = ps.integer_coords
    q = [Fraction(x) * scale for x in point(query)]
    extra = 1
    for x in q:
        extra = lcm(extra, x.denominator)
    if extra != 1:
        coords = [[c * extra for c in row] for row in coords]
    return coords, [int(x * extra) for x in q]


def _locate_many(ps: PointSet, simplices: Sequence[tuple], query) -> list[int]:
    if not simplices:
        return []
    coords, q = scaled_integer_query(ps, query)
    return _kernels.locate(coords, [list(s) for s in simplices], q)


def covering_count(ps: PointSet, k: int, query) -> CoverReport:
    """Number of k-hefty simplices whose interior contains ``query``.

    Queries on the boundary of some k-hefty simplex are not counted for that
    simplex and set ``boundary_flag``.
    """
    q = point(query)
    if len(q) != ps.d:
        raise DimensionMismatch(f"query has dimension {len(q)}, set has {ps.d}")
    if q in ps.points:
        raise GeometryError(f"query coincides with set point {ps.points.index(q)}")
    simplices = enumerate_hefty(ps, k)
    flags = _locate_many(ps, [s.vertices for s in simplices], q)
    witnesses = [s for s, f in zip(simplices, flags) if f == 1]
    return CoverReport(q, k, len(witnesses), witnesses, any(f == 0 for f in flags))


def _local_directions(d: int, count: int) -> list[tuple]:
    rng = random.Random(7919 * d + count)
    out = []
    while len(out) < count:
        v = tuple(rng.randint(-97, 97) for _ in range(d))
        if any(v):
            out.append(v)
    return out


@dataclass
class LocalCoverage:
    vertex: int
    k: int
    counts: list           # stabilized count per direction
    steps: list            # halvings needed per direction
    stable: bool

    @property
    def count(self) -> int | None:
        return self.counts[0] if self.stable and len(set(self.counts)) == 1 else None


def _incident(simplices, vertex):
    return [s for s in simplices if vertex in s.vertices]


def local_covering_profile(ps: PointSet, k: int, vertex: int, simplices=None,
                           directions=None, max_steps: int = 80) -> LocalCoverage:
    """Walk toward ``vertex`` along sampled directions until incident counts settle.

    ``simplices`` defaults to the k-hefty simplices; each direction halves its
    step until the count of incident simplices containing the query is the
    same, with no boundary hits, on three consecutive steps.
    """
    if not 0 <= vertex < ps.n:
        raise IndexError(f"vertex {vertex} out of range")
    if simplices is None:
        simplices = enumerate_hefty(ps, k)
    inc = _incident(simplices, vertex)
    if directions is None:
        directions = _local_directions(ps.d, 2 * ps.d + 1)
    v = ps[vertex]
    nearest = min(max(abs(a - b) for a, b in zip(p, v)) for i, p in enumerate(ps) if i != vertex)
    # the incident count can only change where the ray meets a facet opposite the vertex
    opposite = []
    for s in inc:
        face = [ps[i] for i in s.vertices if i != vertex]
        nrm = _normal_from([sub(f, face[0]) for f in face[1:]], ps.d)
        opposite.append((nrm, dot(nrm, face[0]) - dot(nrm, v)))
    counts, steps, stable = [], [], True
    for u in directions:
        u = tuple(Fraction(x) for x in u)
        norm = max(abs(x) for x in u)
        t = nearest / (4 * norm)
        for nrm, gap in opposite:
            rate = dot(nrm, u)
            if rate and 0 < gap / rate <= t:
                t = gap / rate / 2
        history = []
        for step in range(max_steps):
            q = tuple(a + t * x for a, x in zip(v, u))
            flags = _locate_many(ps, [s.vertices for s in inc], q)
            history.append(None if 0 in flags else sum(1 for f in flags if f == 1))
            if len(history) >= 3 and history[-1] is not None and history[-1] == history[-2] == history[-3]:
                counts.append(history[-1])
                steps.append(step)
                break
            t /= 2
        else:
            stable = False
            counts.append(history[-1])
            steps.append(max_steps)
    return LocalCoverage(vertex, k, counts, steps, stable)


def local_covering_count(ps: PointSet, k: int, vertex: int, simplices=None, directions=None) -> int:
    """Covering multiplicity of a small punctured neighbourhood of ``vertex``.

    Raises StabilizationError if some direction never settles or the sampled
    directions disagree.
    """
    prof = local_covering_profile(ps, k, vertex, simplices, directions)
    if not prof.stable:
        raise StabilizationError(f"local count at vertex {vertex} did not stabilize", prof.counts)
    if len(set(prof.counts)) != 1:
        raise StabilizationError(f"directions disagree at vertex {vertex}", prof.counts)
    return prof.counts[0]


@dataclass
class IncidentCount:
    vertex: int
    k: int
    incident: int          # simplices of heft at most k through the vertex
    local: int | None      # their covering multiplicity near the vertex, if it settled
    lower_bound: int | None

    @property
    def ok(self) -> bool:
        return self.lower_bound is None or self.incident >= self.lower_bound


def incident_at_most_k(ps: PointSet, k: int, vertex: int) -> IncidentCount:
    """Count the simplices of heft at most ``k`` through ``vertex``.

    When their cones cover a punctured neighbourhood of the vertex a uniform
    ``L`` times, each cone fits inside a half-space, so at least ``2L + 1``
    simplices are needed (``2L`` on the line, where a cone is a half-line).
    """
    table = heft_table(ps)
    family = [HeftySimplex(v, h, _mask_to_set(m))
              for v, h, m in zip(table.simplices, table.hefts, table.masks) if h <= k and vertex in v]
    prof = local_covering_profile(ps, k, vertex, simplices=family)
    local = prof.counts[0] if prof.stable and len(set(prof.counts)) == 1 else None
    bound = None if local is None else 2 * local + (ps.d > 1)
    return IncidentCount(vertex, k, len(family), local, bound)


def tukey_depths(ps: PointSet, queries) -> list[int]:
    """Halfspace depth of each query.

    Generic queries go through the kernel; a query on a hyperplane spanned by
    set points falls back to an exact tie-aware recursion.
    """
    qs = [point(q) for q in queries]
    if not qs:
        return []
    members = set(ps.points)
    for q in qs:
        if len(q) != ps.d:
            raise DimensionMismatch(f"query has dimension {len(q)}, set has {ps.d}")
        if q in members:
            raise GeometryError("query coincides with a set point")
    scale, coords = ps.integer_coords
    scaled = [[x * scale for x in q] for q in qs]
    extra = 1
    for q in scaled:
        for x in q:
            extra = lcm(extra, x.denominator)
    coords = [[c * extra for c in row] for row in coords]
    iq = [[int(x * extra) for x in q] for q in scaled]
    try:
        return _kernels.depths(coords, iq)
    except _kernels.DegenerateInput:
        # some query sits on a spanned hyperplane; redo those exactly
        pass
    out = []
    for q in iq:
        try:
            out.append(_kernels.depths(coords, [q])[0])
        except _kernels.DegenerateInput:
            out.append(_depth_exact([[a - b for a, b in zip(row, q)] for row in coords]))
    return out


def _depth_exact(vectors: list) -> int:
    """Tukey depth of the origin among nonzero vectors, tolerating ties.

    The minimum over open cells of the central arrangement is attained next to
    an extreme ray; points on the ray's hyperplane contribute their own depth
    one dimension down.
    """
    d = len(vectors[0])
    if d == 1:
        return min(sum(1 for v in vectors if v[0] > 0), sum(1 for v in vectors if v[0] < 0))
    best = None
    for rows in combinations(vectors, d - 1):
        nrm = _normal_from(rows, d)
        if not any(nrm):
            continue
        pos = neg = 0
        on = []
        for v in vectors:
            s = dot(nrm, v)
            if s > 0:
                pos += 1
            elif s < 0:
                neg += 1
            else:
                on.append(v)
        # coordinates on the hyperplane: drop one axis the normal is not orthogonal to
        j = next(i for i, x in enumerate(nrm) if x != 0)
        sub_vectors = [tuple(x for i, x in enumerate(v) if i != j) for v in on]
        val = min(pos, neg) + _depth_exact(sub_vectors)
        best = val if best is None else min(best, val)
    if best is None:
        # all vectors on one line through the origin
        axis = next(v for v in vectors)
        j = next(i for i, x in enumerate(axis) if x != 0)
        return _depth_exact([(v[j],) for v in vectors])
    return best


def tukey_depth(ps: PointSet, query) -> int:
    return tukey_depths(ps, [query])[0]


def khull_member(ps: PointSet, k: int, query) -> bool:
    """Membership in the k-hull: intersection of closed halfspaces missing <= k points."""
    return tukey_depth(ps, query) >= k + 1


# ---------------------------------------------------------------- generators

def _regular_simplex_directions(d: int) -> list[tuple]:
    """Rational near-regular simplex directions summing exactly to zero."""
    # Gram-Schmidt on e_0 - e_j inside the sum-zero hyperplane of R^{d+1}
    basis = []
    for j in range(1, d + 1):
        v = [0.0] * (d + 1)
        v[0], v[j] = 1.0, -1.0
        for b in basis:
            c = sum(x * y for x, y in zip(v, b))
            v = [x - c * y for x, y in zip(v, b)]
        nv = math.sqrt(sum(x * x for x in v))
        basis.append([x / nv for x in v])
    scale = math.sqrt((d + 1) / d)
    dirs = []
    for j in range(1, d + 1):
        e = [-1.0 / (d + 1)] * (d + 1)
        e[j] += 1.0
        dirs.append(tuple(Fraction(scale * sum(x * y for x, y in zip(e, b))).limit_denominator(240)
                          for b in basis))
    v0 = tuple(-sum(col) for col in zip(*dirs))
    return [v0] + dirs


def _contains_origin_flags(ps: PointSet) -> dict:
    origin = (Fraction(0),) * ps.d
    subsets = list(combinations(range(ps.n), ps.d + 1))
    flags = _locate_many(ps, subsets, origin)
    return dict(zip(subsets, flags))


def gen_radial(d: int, layers: int, seed: int = 0) -> PointSet:
    """Perturbed radial set: points i*v_j for 1 <= i <= layers on d+1 simplex directions.

    Point ``j * layers + (i - 1)`` lies near ``i * v_j``.  The perturbation is
    re-drawn (and shrunk) until the set is generic and a (d+1)-subset contains
    the origin exactly when it takes one point from every direction.
    """
    if layers < 1:
        raise ValueError("layers must be >= 1")
    dirs = _regular_simplex_directions(d)
    rng = random.Random(seed)
    eps = Fraction(1, 16 * layers)
    for _ in range(40):
        pts = []
        for v in dirs:
            for i in range(1, layers + 1):
                pts.append(tuple(i * c + eps * Fraction(rng.randint(-1000, 1000), 1000) for c in v))
        ps = PointSet(tuple(pts), f"radial d={d} layers={layers} seed={seed}")
        if check_generic(ps) is None:
            flags = _contains_origin_flags(ps)
            ok = all(
                (f == 1) == (len({i // layers for i in s}) == d + 1) and f != 0
                for s, f in flags.items()
            )
            if ok:
                return ps
        eps /= 2
    raise GeometryError("could not perturb the radial set into general position")


def radial_compositions(d: int, layers: int, k: int) -> list[tuple]:
    """Vertex sets {(i_j - 1) + j*layers} with sum of (i_j - 1) equal to k."""
    out = []

    def rec(j, left, acc):
        if j == d:
            if left < layers:
                out.append(tuple(sorted(acc + [d * layers + left])))
            return
        for s in range(min(left, layers - 1) + 1):
            rec(j + 1, left - s, acc + [j * layers + s])

    rec(0, k, [])
    return sorted(out)


def gen_pentagon() -> PointSet:
    """One point (index 0) surrounded by five others, in general position.

    The outer points sit near a regular pentagon with slightly different
    radii, so no four points are cocircular.
    """
    pts = [(3, -2)]
    radii = (1000, 1013, 991, 1021, 1007)
    for i, r in enumerate(radii):
        ang = math.pi / 2 + 2 * math.pi * i / 5
        pts.append((round(r * math.cos(ang)), round(r * math.sin(ang))))
    return PointSet(tuple(pts), "pentagon")


def random_generic_set(d: int, n: int, seed: int, box: int = 1000) -> PointSet:
    """Integer points uniform in [-box, box]^d, redrawn until generic."""
    rng = random.Random(seed)
    for _ in range(1000):
        pts = set()
        while len(pts) < n:
            pts.add(tuple(rng.randint(-box, box) for _ in range(d)))
        ps = PointSet(tuple(sorted(pts)), f"random d={d} n={n} seed={seed}")
        if check_generic(ps) is None:
            return ps
    raise GeometryError("failed to draw a generic set")


def random_queries(ps: PointSet, count: int, rng: random.Random, denominator: int = 1009,
                   spread: float = 0.5) -> list[tuple]:
    """Rational sample points: a mix of box-uniform and random convex combinations.

    Convex combinations with random positive weights concentrate near the
    centroid, which is where deep queries live.
    """
    lo = [min(p[j] for p in ps) for j in range(ps.d)]
    hi = [max(p[j] for p in ps) for j in range(ps.d)]
    out = []
    for t in range(count):
        if rng.random() < spread:
            q = tuple(Fraction(round((float(a) + rng.random() * float(b - a)) * denominator), denominator)
                      for a, b in zip(lo, hi))
        else:
            w = [rng.random() ** 3 for _ in range(ps.n)]
            s = sum(w)
            q = tuple(Fraction(round(sum(wi * float(p[j]) for wi, p in zip(w, ps)) / s * denominator),
                               denominator) for j in range(ps.d))
        out.append(q)
    return out


# ---------------------------------------------------------------- local structure

def _angle_key(v):
    x, y = v
    return (0 if (y > 0 or (y == 0 and x > 0)) else 1)


def _angular_sort(vectors: list) -> list[int]:
    """Indices of 2-D vectors sorted counter-clockwise from the positive x-axis."""
    from functools import cmp_to_key

    def cmp(i, j):
        a, b = vectors[i], vectors[j]
        ha, hb = _angle_key(a), _angle_key(b)
        if ha != hb:
            return ha - hb
        cr = a[0] * b[1] - a[1] * b[0]
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(range(len(vectors)), key=cmp_to_key(cmp))


@dataclass
class SplitCheck:
    decomposable: bool
    groups: tuple | None     # a witnessing partition when decomposable


def cover_split_check(simplices: Sequence[HeftySimplex], ps: PointSet, vertex: int,
                      layers: int) -> SplitCheck:
    """Can triangles covering a punctured neighbourhood ``layers`` times be split into single covers?

    Works on the angular sectors cut out at ``vertex`` by the rays through the
    other triangle vertices; the partition search is exhaustive.
    """
    if ps.d != 2:
        raise NotImplementedError("cover splitting is only implemented in the plane")
    v = ps[vertex]
    tris = [tuple(s.vertices) for s in simplices]
    for t in tris:
        if vertex not in t:
            raise GeometryError(f"simplex {t} is not incident to vertex {vertex}")
    others = sorted({i for t in tris for i in t if i != vertex})
    vecs = [sub(ps[i], v) for i in others]
    order = _angular_sort(vecs)
    pos = {others[i]: r for r, i in enumerate(order)}
    m = len(others)
    arcs = []
    for t in tris:
        a, b = [i for i in t if i != vertex]
        va, vb = sub(ps[a], v), sub(ps[b], v)
        if va[0] * vb[1] - va[1] * vb[0] < 0:
            a, b = b, a
        start, end = pos[a], pos[b]
        arcs.append(frozenset((start + s) % m for s in range((end - start) % m)))
    cover = [sum(1 for arc in arcs if s in arc) for s in range(m)]
    if m == 0 or any(c != layers for c in cover):
        raise GeometryError(f"triangles do not cover the neighbourhood {layers} times: {cover}")

    groups: list[list[int]] = []
    used: list[set] = []

    def place(i):
        if i == len(arcs):
            return True
        for g in range(len(groups)):
            if not (used[g] & arcs[i]):
                groups[g].append(i)
                used[g] |= arcs[i]
                if place(i + 1):
                    return True
                groups[g].pop()
                used[g] -= arcs[i]
        if len(groups) < layers:
            groups.append([i])
            used.append(set(arcs[i]))
            if place(i + 1):
                return True
            groups.pop()
            used.pop()
        return False

    if place(0):
        return SplitCheck(True, tuple(tuple(tris[i] for i in g) for g in groups))
    return SplitCheck(False, None)


def _normal_from(directions: Sequence[tuple], d: int) -> tuple:
    """Vector orthogonal to the d-1 given directions (cofactor expansion)."""
    out = []
    for j in range(d):
        minor = [[row[c] for c in range(d) if c != j] for row in directions]
        det = determinant(minor) if minor else Fraction(1)
        out.append(det if (d - 1 + j) % 2 == 0 else -det)
    return tuple(out)


def interiors_disjoint(p: Sequence[tuple], q: Sequence[tuple]) -> bool:
    """Exact test that two full-dimensional simplices have disjoint interiors.

    Looks for a weakly separating hyperplane among the facet normals of the
    Minkowski difference, which are orthogonal to d-1 edge directions.
    """
    d = len(p[0])
    edges = [sub(b, a) for a, b in combinations(p, 2)] + [sub(b, a) for a, b in combinations(q, 2)]
    for dirs in combinations(edges, d - 1):
        nrm = _normal_from(dirs, d)
        if not any(nrm):
            continue
        hp = [dot(nrm, x) for x in p]
        hq = [dot(nrm, x) for x in q]
        if max(hp) <= min(hq) or max(hq) <= min(hp):
            return True
    return False


def fixed_enclosed_disjointness(ps: PointSet, enclosed: Iterable[int]) -> bool:
    """All simplices enclosing exactly ``enclosed`` have pairwise disjoint interiors."""
    b = frozenset(enclosed)
    group = [s for s in enumerate_hefty(ps, len(b)) if s.enclosed == b]
    for s, t in combinations(group, 2):
        if not interiors_disjoint([ps[i] for i in s.vertices], [ps[i] for i in t.vertices]):
            return False
    return True
