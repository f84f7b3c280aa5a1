"""Cells of the order-n Delaunay mosaic, built from hefty simplices.

For 1 <= p <= min(d, n), every (n-p)-hefty simplex contributes one cell whose
vertices average its n-p enclosed points with each p-subset of its d+1
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from hefty.euclidean import HeftySimplex, PointSet, _normal_from, enumerate_hefty
from hefty.numeric import Location, dot, point, sub

__all__ = ["MosaicCell", "order_n_mosaic_cells", "cell_location", "cells_containing"]


@dataclass(frozen=True)
class MosaicCell:
    source: HeftySimplex
    p: int
    vertices: tuple


def order_n_mosaic_cells(ps: PointSet, n: int) -> list[MosaicCell]:
    if n < 1:
        raise ValueError("order must be >= 1")
    d = ps.d
    cells = []
    for p in range(1, min(d, n) + 1):
        if n - p > ps.n - d - 1:
            continue
        for s in enumerate_hefty(ps, n - p):
            base = [sum((ps[i][j] for i in s.enclosed), Fraction(0)) for j in range(d)]
            verts = []
            for sub_idx in combinations(s.vertices, p):
                verts.append(tuple((base[j] + sum(ps[i][j] for i in sub_idx)) / n for j in range(d)))
            cells.append(MosaicCell(s, p, tuple(verts)))
    return cells


def _facets(vertices):
    """(normal, offset) of each facet, normal pointing inward; brute force over d-subsets."""
    d = len(vertices[0])
    out = []
    for idx in combinations(range(len(vertices)), d):
        p0 = vertices[idx[0]]
        nrm = _normal_from([sub(vertices[i], p0) for i in idx[1:]], d)
        if not any(nrm):
            continue
        sides = [dot(nrm, sub(v, p0)) for v in vertices]
        if all(s >= 0 for s in sides):
            out.append((nrm, dot(nrm, p0)))
        elif all(s <= 0 for s in sides):
            out.append((tuple(-x for x in nrm), -dot(nrm, p0)))
    return out


def cell_location(cell: MosaicCell, query) -> Location:
    q = point(query)
    on = False
    for nrm, off in _facets(cell.vertices):
        s = dot(nrm, q) - off
        if s < 0:
            return Location.OUTSIDE
        if s == 0:
            on = True
    return Location.BOUNDARY if on else Location.INTERIOR


def cells_containing(cells, query) -> tuple[list[MosaicCell], bool]:
    """Cells whose interior holds ``query``, plus whether it sat on any cell boundary."""
    inside, boundary = [], False
    for c in cells:
        loc = cell_location(c, query)
        if loc is Location.INTERIOR:
            inside.append(c)
        elif loc is Location.BOUNDARY:
            boundary = True
    return inside, boundary
