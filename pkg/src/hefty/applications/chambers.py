"""Chambers of hyperplane and hemisphere arrangements, and their heft census.

The heft of a chamber is the number of functions that are positive on it.
Chambers are found without linear programming: around every vertex of the
arrangement the 2^d sign patterns of the hyperplanes through it are realized
by exact sample points.  A bounding box adds vertices for chambers that have
none and tells bounded chambers from unbounded ones.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from hefty.applications.levels import AffineFunction, Arrangement
from hefty.euclidean import NonGenericError, _normal_from
from hefty.numeric import GeometryError, SingularMatrixError, dot, solve_linear
from hefty.spherical import SphericalPoint, exact_unit

__all__ = [
    "Chamber", "BoxTooSmall", "enumerate_chambers", "heft_census", "gen_hexmesh",
    "perturbed_hexmesh", "HemisphereCensus", "hemisphere_chambers", "sphere_chambers",
    "regular_polygon_normals", "random_hemispheres",
]


class BoxTooSmall(GeometryError):
    pass


@dataclass(frozen=True)
class Chamber:
    sign_vector: tuple        # +1 / -1 per function
    heft: int
    witness_point: tuple
    bounded: bool = True


def _box_functions(d, b):
    out = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        out.append(AffineFunction(tuple(e), -b))
        e = [0] * d
        e[i] = -1
        out.append(AffineFunction(tuple(e), -b))
    return out


def _vertices(fs, d):
    """(subset, vertex) for every d-subset of functions meeting in one point."""
    for idx in combinations(range(len(fs)), d):
        try:
            v = solve_linear([fs[i].gradient for i in idx], [-fs[i].offset for i in idx])
        except SingularMatrixError:
            continue
        yield idx, v


def _samples(fs, idx, v):
    """Exact points next to vertex ``v`` realizing each sign pattern of the functions in ``idx``."""
    d = len(v)
    grads = [fs[i].gradient for i in idx]
    duals = []
    for j in range(d):
        e = [0] * d
        e[j] = 1
        duals.append(solve_linear(grads, e))
    eps = None
    for t, f in enumerate(fs):
        if t in idx:
            continue
        ht = f(v)
        spread = sum(abs(dot(f.gradient, w)) for w in duals) + 1
        bound = abs(ht) / (2 * spread)
        eps = bound if eps is None else min(eps, bound)
    if eps is None:
        eps = Fraction(1)
    for signs in product((1, -1), repeat=d):
        yield tuple(x + eps * sum(s * w[c] for s, w in zip(signs, duals)) for c, x in enumerate(v))


def enumerate_chambers(arr: Arrangement, bounding_box=None) -> list[Chamber]:
    """All chambers, sorted by sign vector.

    ``bounding_box`` is a half-width B; by default it is chosen just large
    enough to enclose every vertex.  A chamber is unbounded when it reaches the
    box.
    """
    d = arr.d
    fs = list(arr.functions)
    m = len(fs)
    verts = []
    for idx, v in _vertices(fs, d):
        for t, f in enumerate(fs):
            if t not in idx and f(v) == 0:
                raise NonGenericError("more than d hyperplanes through a point", tuple(sorted(idx + (t,))))
        verts.append(v)
    if bounding_box is None:
        big = max((abs(x) for v in verts for x in v), default=Fraction(0))
        b = Fraction(math.floor(big) + 1)
    else:
        b = Fraction(bounding_box)
        for v in verts:
            if any(abs(x) >= b for x in v):
                raise BoxTooSmall(f"vertex {v} lies outside the box of half-width {b}")
    for _ in range(64):
        try:
            return _chambers_in_box(fs, m, d, b)
        except _BoxDegenerate:
            b += Fraction(1, 3)
    raise GeometryError("could not place a non-degenerate bounding box")


class _BoxDegenerate(Exception):
    pass


def _chambers_in_box(fs, m, d, b):
    allf = fs + _box_functions(d, b)
    found: dict[tuple, list] = {}
    unbounded = set()
    for idx, v in _vertices(allf, d):
        if any(f(v) > 0 for f in allf[m:]):
            continue
        for t, f in enumerate(allf):
            if t not in idx and f(v) == 0:
                if all(i < m for i in idx + (t,)):
                    raise NonGenericError("more than d hyperplanes through a point", tuple(sorted(idx + (t,))))
                raise _BoxDegenerate()
        touches_box = any(i >= m for i in idx)
        for x in _samples(allf, idx, v):
            if any(f(x) >= 0 for f in allf[m:]):
                continue
            sv = tuple(1 if f(x) > 0 else -1 for f in fs)
            found.setdefault(sv, []).append(x)
            if touches_box:
                unbounded.add(sv)
    out = []
    for sv in sorted(found):
        # the average of interior samples is interior too, and sits well inside
        xs = found[sv]
        centre = tuple(sum(c, Fraction(0)) / len(xs) for c in zip(*xs))
        out.append(Chamber(sv, sum(1 for s in sv if s > 0), centre, sv not in unbounded))
    return out


def heft_census(chambers) -> dict[int, int]:
    out: dict[int, int] = {}
    for c in chambers:
        out[c.heft] = out.get(c.heft, 0) + 1
    return dict(sorted(out.items()))


def gen_hexmesh(d: int, k: int) -> Arrangement:
    """k parallel hyperplanes per facet of the standard simplex, evenly spaced.

    With barycentric coordinates b_0 = 1 - sum(x) and b_i = x_i, facet i gets
    the functions (2k-1) b_i - 2j for j = 0..k-1; each is positive toward the
    vertex opposite the facet.
    """
    if k < 1 or d < 1:
        raise ValueError("need d >= 1 and k >= 1")
    s = 2 * k - 1
    fs = []
    for j in range(k):
        fs.append(AffineFunction(tuple([-s] * d), s - 2 * j))
    for i in range(d):
        for j in range(k):
            g = [0] * d
            g[i] = s
            fs.append(AffineFunction(tuple(g), -2 * j))
    return Arrangement(fs, f"hexmesh d={d} k={k}")


def perturbed_hexmesh(d: int, k: int, seed: int, scale: Fraction = Fraction(1, 20)) -> Arrangement:
    """Hexmesh with every gradient and offset jittered by a small seeded rational."""
    rng = random.Random(seed)
    base = gen_hexmesh(d, k)
    fs = []
    for f in base:
        g = tuple(x + scale * Fraction(rng.randint(-100, 100), 100) for x in f.gradient)
        fs.append(AffineFunction(g, f.offset + scale * Fraction(rng.randint(-100, 100), 100)))
    return Arrangement(fs, f"perturbed hexmesh d={d} k={k} seed={seed}")


# ---------------------------------------------------------------- hemispheres

def sphere_chambers(normals) -> list[Chamber]:
    """Cells of the arrangement of great subspheres <n_i, x> = 0 on S^d.

    Heft counts the open hemispheres <n_i, x> > 0 containing the cell.  Every
    cell is a pointed cone once the normals span, so sampling around each ray
    where d great subspheres meet finds them all.
    """
    vecs = [n.homogeneous if isinstance(n, SphericalPoint) else tuple(Fraction(x) for x in n) for n in normals]
    d1 = len(vecs[0])
    if len(vecs) < d1:
        raise GeometryError("need at least d+1 hemispheres")
    found: dict[tuple, Chamber] = {}
    for idx in combinations(range(len(vecs)), d1 - 1):
        r = _normal_from([vecs[i] for i in idx], d1) if d1 > 1 else (Fraction(1),)
        if not any(r):
            raise NonGenericError("normals on a common great subsphere", idx)
        rows = [list(vecs[i]) for i in idx] + [list(r)]
        duals = []
        for j in range(d1 - 1):
            e = [0] * d1
            e[j] = 1
            duals.append(solve_linear(rows, e))
        for ray in (r, tuple(-x for x in r)):
            eps = None
            for t, n in enumerate(vecs):
                if t in idx:
                    continue
                ht = dot(n, ray)
                if ht == 0:
                    raise NonGenericError("d+1 great subspheres through a point", tuple(sorted(idx + (t,))))
                bound = abs(ht) / (2 * (sum(abs(dot(n, w)) for w in duals) + 1))
                eps = bound if eps is None else min(eps, bound)
            for signs in product((1, -1), repeat=d1 - 1):
                x = tuple(c + eps * sum(s * w[j] for s, w in zip(signs, duals)) for j, c in enumerate(ray))
                sv = tuple(1 if dot(n, x) > 0 else -1 for n in vecs)
                if sv not in found:
                    found[sv] = Chamber(sv, sum(1 for s in sv if s > 0), x, True)
    return [found[sv] for sv in sorted(found)]


@dataclass
class HemisphereCensus:
    census: dict
    min_heft: int
    min_count: int
    general_bound: int
    restricted_bound: int | None      # applies only with enough hemispheres
    chambers: list = field(repr=False, default_factory=list)

    @property
    def ok(self) -> bool:
        if self.min_count > self.general_bound:
            return False
        return self.restricted_bound is None or self.min_count <= self.restricted_bound


def hemisphere_chambers(normals, k=None) -> HemisphereCensus:
    """Heft census of hemisphere chambers with the bounds for the minimum heft.

    ``k`` defaults to the realized minimum heft; when given, the bounds are
    evaluated for that k.
    """
    chambers = sphere_chambers(normals)
    census = heft_census(chambers)
    n = len(normals)
    d = len(chambers[0].witness_point) - 1
    m = min(census)
    kk = m if k is None else k
    general = comb(d + kk, d) + comb(d + kk - 1, d)
    restricted = comb(d + kk, d) if n > kk + kk * comb(d + kk, d) else None
    return HemisphereCensus(census, m, census.get(kk, 0), general, restricted, chambers)


def _unit_at_angle(theta: float, denominator: int = 10 ** 6) -> SphericalPoint:
    c, s = math.cos(theta), math.sin(theta)
    y = Fraction(2 * c / (1 - s)).limit_denominator(denominator)
    return exact_unit((y,))


def regular_polygon_normals(m: int, phase: float = 0.1) -> list[SphericalPoint]:
    """Rational points close to the vertices of a regular m-gon on S^1."""
    return [_unit_at_angle(phase + 2 * math.pi * i / m) for i in range(m)]


def random_hemispheres(n: int, min_heft: int, seed: int, spread: float = 0.6) -> list[SphericalPoint]:
    """Seeded S^1 normals: a tight cluster plus ``min_heft`` stragglers on the far side.

    Directions opposite the cluster lie in the stragglers' hemispheres only,
    which keeps the minimum heft small while n is large.
    """
    rng = random.Random(seed)
    angles = [rng.uniform(-spread, spread) for _ in range(n - min_heft)]
    angles += [math.pi + rng.uniform(-1.2, 1.2) for _ in range(min_heft)]
    return [_unit_at_angle(a + 0.05) for a in angles]
