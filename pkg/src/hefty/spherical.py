"""Finite point sets on the sphere S^d, embedded in R^(d+1).

Points are stored as homogeneous rational vectors and normalized exactly when
their squared norm is a rational square (which is the case for every point
produced by :func:`exact_unit`).  The inside of a spherical simplex's
circumscribed cap is the side of the spanning hyperplane away from the origin,
so heft is a pure sign count on integer data.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import isqrt, lcm
from typing import Sequence

from hefty.euclidean import (
    CoverReport, HeftySimplex, NonGenericError, PointSet, _normal_from, covering_count,
)
from hefty.numeric import (
    DimensionMismatch, GeometryError, SingularMatrixError, dot, point, scalar, solve_linear,
)

__all__ = [
    "SphericalPoint", "SphericalWeightedPoint", "SphericalSet",
    "exact_unit", "stereographic", "reflection_to_pole", "stereographic_image",
    "is_k_balanced", "min_hemisphere_count", "spherical_heft", "spherical_heft_weighted",
    "enumerate_spherical", "covering_count_sphere", "transfer_check", "random_balanced_set",
    "spherical_containment", "random_sphere_point", "TransferCheck",
]


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = isqrt(x.numerator), isqrt(x.denominator)
    if n * n == x.numerator and d * d == x.denominator:
        return Fraction(n, d)
    return None


@dataclass(frozen=True)
class SphericalPoint:
    """A ray from the origin, given by any nonzero representative."""

    homogeneous: tuple

    def __post_init__(self):
        v = point(self.homogeneous)
        if not any(v):
            raise GeometryError("zero vector is not a direction")
        object.__setattr__(self, "homogeneous", v)

    @property
    def d(self) -> int:
        """Dimension of the sphere (one less than the ambient space)."""
        return len(self.homogeneous) - 1

    def unit(self) -> tuple:
        r = _rational_sqrt(dot(self.homogeneous, self.homogeneous))
        if r is None:
            raise GeometryError(f"{self.homogeneous} has no rational unit representative")
        return tuple(x / r for x in self.homogeneous)

    def antipode(self) -> "SphericalPoint":
        return SphericalPoint(tuple(-x for x in self.homogeneous))


@dataclass(frozen=True)
class SphericalWeightedPoint:
    direction: SphericalPoint
    radius: Fraction = Fraction(1)

    def __post_init__(self):
        r = scalar(self.radius)
        if r < 0:
            raise GeometryError("radius must be non-negative")
        object.__setattr__(self, "radius", r)

    @property
    def weight(self) -> Fraction:
        return self.radius ** 2 - 1

    def lifted(self) -> tuple:
        return tuple(self.radius * x for x in self.direction.unit())


def exact_unit(y) -> SphericalPoint:
    """Inverse stereographic projection from the north pole onto the plane x_(d+1) = -1."""
    y = point(y)
    s = dot(y, y)
    den = s + 4
    return SphericalPoint(tuple(4 * c / den for c in y) + ((s - 4) / den,))


def stereographic(u: SphericalPoint) -> tuple:
    """Forward projection from the north pole onto the plane x_(d+1) = -1."""
    v = u.unit()
    if v[-1] == 1:
        raise GeometryError("the pole has no stereographic image")
    return tuple(2 * c / (1 - v[-1]) for c in v[:-1])


def reflection_to_pole(pole: SphericalPoint):
    """Rational reflection of R^(d+1) taking ``pole`` to the north pole."""
    x = pole.unit()
    north = (Fraction(0),) * (len(x) - 1) + (Fraction(1),)
    v = tuple(a - b for a, b in zip(x, north))
    vv = dot(v, v)
    if vv == 0:
        return lambda p: tuple(p)

    def apply(p):
        c = 2 * dot(v, p) / vv
        return tuple(a - c * b for a, b in zip(p, v))

    return apply


def stereographic_image(pts: Sequence[SphericalPoint], pole: SphericalPoint) -> PointSet:
    """Project from ``pole`` onto the tangent plane at its antipode (which maps to 0)."""
    refl = reflection_to_pole(pole)
    return PointSet(tuple(stereographic(SphericalPoint(refl(p.unit()))) for p in pts),
                    "stereographic image")


class SphericalSet:
    """Indexed points on S^d, optionally with radii (weighted lifting r * a)."""

    def __init__(self, pts, radii=None, label=""):
        pts = tuple(p if isinstance(p, SphericalPoint) else SphericalPoint(p) for p in pts)
        if not pts:
            raise GeometryError("empty spherical set")
        d = pts[0].d
        for p in pts:
            if p.d != d:
                raise DimensionMismatch("mixed sphere dimensions")
        self.points = pts
        self.radii = None if radii is None else tuple(scalar(r) for r in radii)
        if self.radii is not None and len(self.radii) != len(pts):
            raise DimensionMismatch("one radius per point")
        self.label = label
        units = [p.unit() for p in pts]
        if len(set(units)) != len(units):
            raise GeometryError("duplicate directions")

    @property
    def d(self) -> int:
        return self.points[0].d

    @property
    def n(self) -> int:
        return len(self.points)

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.points[i]

    @property
    def weighted(self) -> bool:
        return self.radii is not None

    def weighted_points(self) -> list[SphericalWeightedPoint]:
        radii = self.radii or (Fraction(1),) * self.n
        return [SphericalWeightedPoint(p, r) for p, r in zip(self.points, radii)]

    @cached_property
    def lifted_integer(self) -> list[list[int]]:
        """Lifted points r * unit(a), all scaled by one common positive integer."""
        rows = [w.lifted() for w in self.weighted_points()]
        s = 1
        for r in rows:
            for x in r:
                s = lcm(s, x.denominator)
        return [[int(x * s) for x in r] for r in rows]

    @cached_property
    def table(self):
        return _spherical_table(self)


def _spherical_table(ss: SphericalSet):
    pts = ss.lifted_integer
    n, d1 = ss.n, ss.d + 1
    out = []
    for idx in combinations(range(n), d1):
        p0 = pts[idx[0]]
        rows = [[a - b for a, b in zip(pts[i], p0)] for i in idx[1:]]
        nrm = _normal_from(rows, d1) if d1 > 1 else (Fraction(1),)
        c = dot(nrm, p0)
        if c == 0:
            raise NonGenericError("spanning plane passes through the origin", idx)
        enclosed = []
        for j in range(n):
            if j in idx:
                continue
            s = dot(nrm, pts[j]) - c
            if s == 0:
                raise NonGenericError("d+2 lifted points on a common plane", tuple(sorted(idx + (j,))))
            if (s > 0) == (c > 0):
                enclosed.append(j)
        out.append(HeftySimplex(idx, len(enclosed), frozenset(enclosed)))
    return out


def _validate(ss: SphericalSet, vertex_indices) -> tuple:
    idx = tuple(sorted(int(i) for i in vertex_indices))
    if len(idx) != ss.d + 1 or len(set(idx)) != len(idx) or idx[0] < 0 or idx[-1] >= ss.n:
        raise GeometryError(f"need {ss.d + 1} distinct valid indices, got {vertex_indices!r}")
    return idx


def _heft_by_solve(lifted: list[tuple], idx: tuple) -> HeftySimplex:
    try:
        nrm = solve_linear([lifted[i] for i in idx], [1] * len(idx))
    except SingularMatrixError:
        raise NonGenericError("spanning plane passes through the origin", idx) from None
    enclosed = set()
    for j, q in enumerate(lifted):
        if j in idx:
            continue
        s = dot(nrm, q)
        if s == 1:
            raise NonGenericError("d+2 lifted points on a common plane", tuple(sorted(idx + (j,))))
        if s > 1:
            enclosed.add(j)
    return HeftySimplex(idx, len(enclosed), frozenset(enclosed))


def spherical_heft(ss: SphericalSet, vertex_indices) -> HeftySimplex:
    """Points in the open cap cut off by the plane through the d+1 unit vectors."""
    idx = _validate(ss, vertex_indices)
    return _heft_by_solve([p.unit() for p in ss.points], idx)


def spherical_heft_weighted(ss: SphericalSet, vertex_indices) -> HeftySimplex:
    """Lifted points r * a separated from the origin by the plane through the vertices' lifts."""
    idx = _validate(ss, vertex_indices)
    return _heft_by_solve([w.lifted() for w in ss.weighted_points()], idx)


def enumerate_spherical(ss: SphericalSet, k: int) -> list[HeftySimplex]:
    return [s for s in ss.table if s.heft == k]


def spherical_containment(vertices: Sequence[tuple], query: tuple) -> int:
    """+1 if the ray of ``query`` is inside the cone over ``vertices``, 0 on its boundary, -1 outside."""
    try:
        lam = solve_linear([list(col) for col in zip(*vertices)], query)
    except SingularMatrixError:
        raise NonGenericError("vertices lie on a great subsphere", tuple(vertices)) from None
    if any(x < 0 for x in lam):
        return -1
    return 0 if any(x == 0 for x in lam) else 1


def covering_count_sphere(ss: SphericalSet, k: int, query: SphericalPoint) -> CoverReport:
    """Heft-k spherical simplices containing ``query``; lifted heft when ``ss`` has radii."""
    if not isinstance(query, SphericalPoint):
        query = SphericalPoint(query)
    if query.d != ss.d:
        raise DimensionMismatch("query on a sphere of different dimension")
    q = query.homogeneous
    witnesses, boundary = [], False
    for s in enumerate_spherical(ss, k):
        f = spherical_containment([ss[i].homogeneous for i in s.vertices], q)
        if f == 1:
            witnesses.append(s)
        elif f == 0:
            boundary = True
    return CoverReport(q, k, len(witnesses), witnesses, boundary)


def min_hemisphere_count(pts: Sequence[SphericalPoint]) -> int:
    """Fewest points in an open hemisphere.

    The strict count only drops when the hemisphere's pole moves onto a lower
    dimensional face of the arrangement of great subspheres, so the minimum is
    attained at poles orthogonal to d of the points.  Ties need no special care.
    """
    vecs = [p.homogeneous for p in pts]
    d1 = len(vecs[0])
    best = None
    for idx in combinations(range(len(vecs)), d1 - 1):
        nrm = _normal_from([vecs[i] for i in idx], d1) if d1 > 1 else (Fraction(1),)
        if not any(nrm):
            continue
        pos = neg = 0
        for v in vecs:
            s = dot(nrm, v)
            if s > 0:
                pos += 1
            elif s < 0:
                neg += 1
        best = min(pos, neg) if best is None else min(best, pos, neg)
    # no d independent points: some hemisphere misses them all
    return 0 if best is None else best


def is_k_balanced(pts: Sequence[SphericalPoint], k: int) -> bool:
    """Every open hemisphere holds at least k+1 of the points."""
    pts = [p if isinstance(p, SphericalPoint) else SphericalPoint(p) for p in pts]
    return min_hemisphere_count(pts) >= k + 1


@dataclass
class TransferCheck:
    sphere_sets: list
    plane_sets: list

    @property
    def ok(self) -> bool:
        return self.sphere_sets == self.plane_sets


def transfer_check(ss: SphericalSet, k: int, pole: SphericalPoint) -> TransferCheck:
    """Compare k-hefty simplices at the pole's antipode with those of the stereographic image at 0."""
    antipode = pole.antipode()
    on_sphere = sorted(s.vertices for s in covering_count_sphere(ss, k, antipode).witnesses)
    image = stereographic_image(ss.points, pole)
    origin = (Fraction(0),) * ss.d
    in_plane = sorted(s.vertices for s in covering_count(image, k, origin).witnesses)
    return TransferCheck(on_sphere, in_plane)


def _random_unit(rng: random.Random, d: int, denominator: int = 997) -> SphericalPoint:
    """Rational point on S^d, roughly uniform: a gaussian direction pulled back exactly."""
    while True:
        g = [rng.gauss(0, 1) for _ in range(d + 1)]
        norm = math.sqrt(sum(x * x for x in g))
        u = [x / norm for x in g]
        if u[-1] > 0.999:
            continue
        y = [Fraction(2 * c / (1 - u[-1])).limit_denominator(denominator) for c in u[:-1]]
        return exact_unit(y)


def random_balanced_set(d: int, n: int, k: int, seed: int, max_tries: int = 500) -> SphericalSet:
    """Seeded generic k-balanced set of n rational points on S^d."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = [_random_unit(rng, d) for _ in range(n)]
        try:
            if not is_k_balanced(pts, k):
                continue
            ss = SphericalSet(pts, label=f"balanced d={d} n={n} k={k} seed={seed}")
            ss.table
        except (NonGenericError, GeometryError):
            continue
        return ss
    raise GeometryError(f"no {k}-balanced set of {n} points found")


def random_sphere_point(rng: random.Random, d: int) -> SphericalPoint:
    return _random_unit(rng, d, 10007)
