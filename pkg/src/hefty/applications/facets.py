"""Inversion through a sphere, k-facets and directed line entries.

A k-facet is a d-subset D together with an orientation of its spanning
hyperplane such that exactly k of the remaining points lie on the positive
side.  Every d-subset therefore appears twice, once per orientation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from hefty.euclidean import NonGenericError, PointSet, _normal_from, enumerate_hefty
from hefty.numeric import GeometryError, SingularMatrixError, dot, point, solve_linear, sub

__all__ = [
    "KFacet", "invert", "oriented_facets", "k_facets", "facet_counts",
    "line_entry_count", "facet_transfer",
]


@dataclass(frozen=True)
class KFacet:
    vertices: tuple
    positive: frozenset     # indices strictly on the counted side
    normal: tuple           # points into the counted side

    @property
    def k(self) -> int:
        return len(self.positive)


def invert(z, ps: PointSet) -> PointSet:
    """Inversion through the unit sphere centred at ``z``."""
    z = point(z)
    out = []
    for a in ps:
        v = sub(a, z)
        s = dot(v, v)
        if s == 0:
            raise GeometryError("cannot invert the centre of inversion")
        out.append(tuple(zi + vi / s for zi, vi in zip(z, v)))
    return PointSet(tuple(out), ps.label)


def oriented_facets(ps: PointSet) -> list[KFacet]:
    """Both orientations of every d-subset, in lexicographic order of the subset."""
    d = ps.d
    out = []
    for idx in combinations(range(ps.n), d):
        p0 = ps[idx[0]]
        nrm = _normal_from([sub(ps[i], p0) for i in idx[1:]], d)
        if not any(nrm):
            raise NonGenericError("d points on a common (d-2)-flat", idx)
        pos, neg = [], []
        for j in range(ps.n):
            if j in idx:
                continue
            s = dot(nrm, sub(ps[j], p0))
            if s == 0:
                raise NonGenericError("d+1 points on a common hyperplane", tuple(sorted(idx + (j,))))
            (pos if s > 0 else neg).append(j)
        out.append(KFacet(idx, frozenset(pos), nrm))
        out.append(KFacet(idx, frozenset(neg), tuple(-x for x in nrm)))
    return out


def k_facets(ps: PointSet, k: int) -> list[KFacet]:
    return [f for f in oriented_facets(ps) if f.k == k]


def facet_counts(ps: PointSet, max_k: int) -> list[int]:
    """F_0 .. F_max_k under the oriented convention."""
    counts = [0] * (max_k + 1)
    for f in oriented_facets(ps):
        if f.k <= max_k:
            counts[f.k] += 1
    return counts


def line_entry_count(ps: PointSet, k: int, origin, direction) -> int:
    """Number of k-facets the directed line crosses from the k side to the other side."""
    o, u = point(origin), point(direction)
    if not any(u):
        raise GeometryError("line direction must be nonzero")
    count = 0
    for f in oriented_facets(ps):
        if f.k != k:
            continue
        # the line must move against the normal before the crossing: from positive to negative
        if dot(f.normal, u) >= 0:
            continue
        p0 = ps[f.vertices[0]]
        cols = [sub(ps[i], p0) for i in f.vertices[1:]] + [tuple(-x for x in u)]
        try:
            sol = solve_linear([list(r) for r in zip(*cols)], sub(o, p0))
        except SingularMatrixError:
            continue
        beta = sol[:-1]
        b0 = 1 - sum(beta, Fraction(0))
        if any(b == 0 for b in beta) or b0 == 0:
            raise GeometryError(f"line meets the boundary of facet {f.vertices}")
        if all(b > 0 for b in beta) and b0 > 0:
            count += 1
    return count


@dataclass
class FacetTransfer:
    j: int
    facets: list      # vertex tuples of oriented j-facets with z on the far side
    simplices: list   # vertex tuples (without z) of j-hefty simplices incident to z

    @property
    def ok(self) -> bool:
        return self.facets == self.simplices


def facet_transfer(ps: PointSet, z, k: int) -> list[FacetTransfer]:
    """Match j-facets missing ``z`` against j-hefty simplices at ``z`` after inversion, j <= k."""
    z = point(z)
    image = invert(z, ps)
    lifted = PointSet(image.points + (z,), "inverted")
    zi = ps.n
    out = []
    facets = oriented_facets(ps)
    for j in range(k + 1):
        fs = []
        for f in facets:
            if f.k != j:
                continue
            s = dot(f.normal, sub(z, ps[f.vertices[0]]))
            if s == 0:
                raise NonGenericError("centre lies on a spanned hyperplane", f.vertices)
            if s < 0:
                fs.append(f.vertices)
        simp = [tuple(i for i in s.vertices if i != zi)
                for s in enumerate_hefty(lifted, j) if zi in s.vertices]
        out.append(FacetTransfer(j, sorted(fs), sorted(simp)))
    return out
