"""Weighted points, power distance and weighted heft.

A weighted point ``(a, w)`` with ``w = r**2`` stands for the sphere of radius
``r`` around ``a``; weights may be negative.  Two weighted points are orthogonal
when ``|a - b|**2 == w_a + w_b``.  The heft of a simplex on d+1 weighted points
counts the other weighted points that are closer than orthogonal to the unique
weighted point orthogonal to all d+1 of them.  With all weights zero everything
here reduces to :mod:`hefty.euclidean`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Sequence

from hefty import _kernels
from hefty.euclidean import (
    CoverReport, HeftySimplex, HeftTable, NonGenericError, PointSet, StabilizationError,
    _kernel_error,
    _locate_many, _validate_indices, local_covering_profile,
)
from hefty.numeric import (
    DegenerateError, DimensionMismatch, GeometryError, SingularMatrixError, Sign,
    dot, orientation, point, scalar, solve_linear, squared_distance, sub,
)

__all__ = [
    "WeightedPoint", "WeightedSet", "Hyperplane",
    "power", "bisector", "orthocenter", "is_orthogonal", "pencil_center",
    "orthogonal_weight", "equal_power_point",
    "weighted_heft", "weighted_heft_table", "enumerate_weighted", "covering_count_weighted",
    "local_bound_count",
]


@dataclass(frozen=True)
class WeightedPoint:
    location: tuple
    weight: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "location", point(self.location))
        object.__setattr__(self, "weight", scalar(self.weight))

    @property
    def d(self):
        return len(self.location)


@dataclass(frozen=True)
class Hyperplane:
    """Points x with <normal, x> == offset."""

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        if not any(self.normal):
            raise GeometryError("hyperplane normal must be nonzero")

    def side(self, x) -> Sign:
        return Sign.of(dot(self.normal, point(x)) - self.offset)


def power(p: WeightedPoint, x) -> Fraction:
    x = point(x)
    if len(x) != p.d:
        raise DimensionMismatch(f"point has dimension {len(x)}, weighted point {p.d}")
    return squared_distance(x, p.location) - p.weight


def bisector(a: WeightedPoint, b: WeightedPoint) -> Hyperplane:
    """Locus of equal power: 2<b - a, x> = |b|^2 - |a|^2 + w_a - w_b.

    The side with positive sign is where ``b`` has the smaller power.
    """
    if a.location == b.location:
        raise GeometryError("bisector of coincident locations")
    if a.d != b.d:
        raise DimensionMismatch("weighted points of different dimension")
    normal = tuple(2 * (y - x) for x, y in zip(a.location, b.location))
    offset = dot(b.location, b.location) - dot(a.location, a.location) + a.weight - b.weight
    return Hyperplane(normal, offset)


def is_orthogonal(a: WeightedPoint, b: WeightedPoint) -> bool:
    return squared_distance(a.location, b.location) == a.weight + b.weight


def orthocenter(pts: Sequence[WeightedPoint]) -> WeightedPoint:
    """The weighted point orthogonal to each of d+1 weighted points."""
    pts = list(pts)
    d = pts[0].d
    if len(pts) != d + 1:
        raise DimensionMismatch(f"orthocenter needs {d + 1} weighted points in R^{d}")
    a0, w0 = pts[0].location, pts[0].weight
    rows, rhs = [], []
    for p in pts[1:]:
        e = sub(p.location, a0)
        rows.append([2 * x for x in e])
        rhs.append(dot(e, e) - p.weight + w0)
    try:
        rel = solve_linear(rows, rhs)
    except SingularMatrixError:
        raise DegenerateError("affinely dependent locations", [p.location for p in pts]) from None
    center = tuple(a + r for a, r in zip(a0, rel))
    return WeightedPoint(center, dot(rel, rel) - w0)


def pencil_center(pts: Sequence[WeightedPoint]) -> WeightedPoint:
    """Minimum-weight point orthogonal to p+1 <= d+1 weighted points.

    Its location is the point of equal power inside the affine hull of the
    locations.
    """
    pts = list(pts)
    a0, w0 = pts[0].location, pts[0].weight
    edges = [sub(p.location, a0) for p in pts[1:]]
    if not edges:
        return WeightedPoint(a0, -w0)
    gram = [[2 * dot(e, f) for f in edges] for e in edges]
    rhs = [dot(e, e) - p.weight + w0 for e, p in zip(edges, pts[1:])]
    try:
        t = solve_linear(gram, rhs)
    except SingularMatrixError:
        raise DegenerateError("affinely dependent locations", [p.location for p in pts]) from None
    rel = tuple(sum((ti * e[j] for ti, e in zip(t, edges)), Fraction(0)) for j in range(len(a0)))
    return WeightedPoint(tuple(a + r for a, r in zip(a0, rel)), dot(rel, rel) - w0)


def orthogonal_weight(pts: Sequence[WeightedPoint], x) -> Fraction:
    """Weight making ``x`` orthogonal to every input; ``x`` must have equal power from all."""
    x = point(x)
    powers = {power(p, x) for p in pts}
    if len(powers) != 1:
        raise GeometryError("point does not have equal power from all weighted points")
    return powers.pop()


def equal_power_point(pts: Sequence[WeightedPoint], direction) -> tuple:
    """Pencil center moved along the part of ``direction`` orthogonal to the locations' span."""
    z = pencil_center(pts).location
    a0 = pts[0].location
    edges = [sub(p.location, a0) for p in pts[1:]]
    v = point(direction)
    if edges:
        gram = [[dot(e, f) for f in edges] for e in edges]
        t = solve_linear(gram, [dot(e, v) for e in edges])
        v = tuple(vj - sum((ti * e[j] for ti, e in zip(t, edges)), Fraction(0))
                  for j, vj in enumerate(v))
    return tuple(a + b for a, b in zip(z, v))


class WeightedSet:
    """Indexed weighted points with distinct locations."""

    def __init__(self, pts: Sequence[WeightedPoint], label: str = ""):
        pts = tuple(p if isinstance(p, WeightedPoint) else WeightedPoint(*p) for p in pts)
        self.points = pts
        self.locations = PointSet(tuple(p.location for p in pts), label)
        self.weights = tuple(p.weight for p in pts)
        self.label = label

    @classmethod
    def from_rows(cls, rows, label=""):
        """Rows of d coordinates followed by the weight."""
        return cls([WeightedPoint(tuple(r[:-1]), r[-1]) for r in rows], label)

    @property
    def d(self):
        return self.locations.d

    @property
    def n(self):
        return self.locations.n

    def __len__(self):
        return self.n

    def __getitem__(self, i):
        return self.points[i]

    def __eq__(self, other):
        return isinstance(other, WeightedSet) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    @cached_property
    def integer_data(self):
        """(scale, coords, weights) with coordinates times s and weights times s**2 integral."""
        s = 1
        for p in self.points:
            for x in p.location:
                s = lcm(s, x.denominator)
            s = lcm(s, p.weight.denominator)
        coords = [[int(x * s) for x in p.location] for p in self.points]
        weights = [int(p.weight * s * s) for p in self.points]
        return s, coords, weights

    @cached_property
    def table(self) -> HeftTable:
        _, coords, weights = self.integer_data
        n, d = self.n, self.d
        if n < d + 1:
            return HeftTable(n, d, (), ())
        try:
            hefts, masks = _kernels.heft_table(coords, weights)
        except _kernels.DegenerateInput as exc:
            raise _kernel_error(exc, "weighted set") from None
        return HeftTable(n, d, tuple(hefts), tuple(masks))


def weighted_heft(ws: WeightedSet, vertex_indices) -> HeftySimplex:
    """Heft via an explicit orthocenter and the closer-than-orthogonal test."""
    idx = _validate_indices(ws.locations, vertex_indices)
    if orientation([ws[i].location for i in idx]) == Sign.ZERO:
        raise NonGenericError("degenerate simplex", idx)
    x = orthocenter([ws[i] for i in idx])
    enclosed = set()
    for j in range(ws.n):
        if j in idx:
            continue
        b = ws[j]
        t = squared_distance(x.location, b.location) - x.weight - b.weight
        if t == 0:
            raise NonGenericError("weighted point orthogonal to orthocenter", tuple(sorted(idx + (j,))))
        if t < 0:
            enclosed.add(j)
    return HeftySimplex(idx, len(enclosed), frozenset(enclosed))


def weighted_heft_table(ws: WeightedSet) -> HeftTable:
    return ws.table


def enumerate_weighted(ws: WeightedSet, k: int) -> list[HeftySimplex]:
    if k < 0:
        raise ValueError("k must be non-negative")
    return ws.table.with_heft(k)


def covering_count_weighted(ws: WeightedSet, k: int, query) -> CoverReport:
    """Heft-k simplices (hulls of locations) whose interior contains ``query``."""
    q = point(query)
    if len(q) != ws.d:
        raise DimensionMismatch(f"query has dimension {len(q)}, set has {ws.d}")
    simplices = enumerate_weighted(ws, k)
    flags = _locate_many(ws.locations, [s.vertices for s in simplices], q)
    witnesses = [s for s, f in zip(simplices, flags) if f == 1]
    return CoverReport(q, k, len(witnesses), witnesses, any(f == 0 for f in flags))


def local_bound_count(ws: WeightedSet, k: int, vertex: int) -> int:
    """Local covering multiplicity at a location by simplices of heft at most k.

    Returns the largest stabilized count over the sampled directions.
    """
    simplices = [s for h in range(k + 1) for s in enumerate_weighted(ws, h)]
    prof = local_covering_profile(ws.locations, k, vertex, simplices=simplices)
    if not prof.stable:
        raise StabilizationError(f"local count at vertex {vertex} did not stabilize", prof.counts)
    return max(prof.counts)
