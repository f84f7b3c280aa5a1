"""Affine functions, their arrangements and local extrema of k-levels.

The k-level maps x to the (k+1)-largest value among the functions.  A vertex
where d+1 functions agree is a local minimum of the k-level exactly when the
origin is interior to the convex hull of their gradients and k functions pass
strictly above the common value.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from hefty.euclidean import NonGenericError
from hefty.numeric import DimensionMismatch, GeometryError, SingularMatrixError, dot, point, scalar, solve_linear

log = logging.getLogger(__name__)

__all__ = [
    "AffineFunction", "Arrangement", "level_value", "level_minima", "level_maxima",
    "random_arrangement",
]


@dataclass(frozen=True)
class AffineFunction:
    """h(x) = <x, gradient> + offset."""

    gradient: tuple
    offset: Fraction

    def __post_init__(self):
        g = point(self.gradient)
        if not any(g):
            raise GeometryError("gradient must be nonzero")
        object.__setattr__(self, "gradient", g)
        object.__setattr__(self, "offset", scalar(self.offset))

    def __call__(self, x) -> Fraction:
        return dot(self.gradient, x) + self.offset


class Arrangement:
    def __init__(self, functions, label=""):
        fs = tuple(f if isinstance(f, AffineFunction) else AffineFunction(f[:-1], f[-1]) for f in functions)
        if not fs:
            raise GeometryError("empty arrangement")
        d = len(fs[0].gradient)
        for f in fs:
            if len(f.gradient) != d:
                raise DimensionMismatch("functions of different dimension")
        self.functions = fs
        self.label = label

    @classmethod
    def from_rows(cls, rows, label=""):
        """Rows ``g_1 .. g_d c``."""
        return cls([AffineFunction(tuple(r[:-1]), r[-1]) for r in rows], label)

    @property
    def d(self) -> int:
        return len(self.functions[0].gradient)

    def __len__(self):
        return len(self.functions)

    def __getitem__(self, i):
        return self.functions[i]

    def __iter__(self):
        return iter(self.functions)

    def __eq__(self, other):
        return isinstance(other, Arrangement) and self.functions == other.functions

    def __hash__(self):
        return hash(self.functions)

    def values(self, x) -> list[Fraction]:
        return [f(x) for f in self.functions]


def level_value(arr: Arrangement, k: int, x) -> Fraction:
    """The (k+1)-largest function value at ``x``."""
    vals = sorted(arr.values(point(x)), reverse=True)
    return vals[k]


def _origin_inside(gradients) -> bool:
    """0 strictly inside the convex hull of d+1 gradients in R^d."""
    d = len(gradients[0])
    rows = [[g[j] for g in gradients] for j in range(d)] + [[1] * (d + 1)]
    try:
        mu = solve_linear(rows, [0] * d + [1])
    except SingularMatrixError:
        return False
    return all(m > 0 for m in mu)


def _candidate_vertices(arr: Arrangement):
    d = arr.d
    for idx in combinations(range(len(arr)), d + 1):
        rows = [list(arr[i].gradient) + [-1] for i in idx]
        try:
            sol = solve_linear(rows, [-arr[i].offset for i in idx])
        except SingularMatrixError:
            log.debug("functions %s have no isolated common point", idx)
            continue
        x, xi = sol[:-1], sol[-1]
        above = through = 0
        for j, f in enumerate(arr):
            if j in idx:
                continue
            v = f(x)
            if v > xi:
                above += 1
            elif v == xi:
                through += 1
        if through:
            raise NonGenericError("more than d+1 functions agree at one point", idx)
        yield idx, x, xi, above


def level_minima(arr: Arrangement, k: int) -> list[tuple]:
    """Strict local minima of the k-level, as points of R^d, in subset order."""
    if k < 0:
        return []
    out = []
    for idx, x, xi, above in _candidate_vertices(arr):
        if above == k and _origin_inside([arr[i].gradient for i in idx]):
            out.append(x)
    return out


def level_maxima(arr: Arrangement, k: int) -> list[tuple]:
    """Strict local maxima of the k-level: the local minima of the (k-d)-level."""
    if k < arr.d:
        return []
    return level_minima(arr, k - arr.d)


def random_arrangement(d: int, m: int, seed: int, box: int = 50) -> Arrangement:
    """Seeded integer arrangement with nonzero gradients, redrawn until generic."""
    rng = random.Random(seed)
    for _ in range(1000):
        rows = []
        for _ in range(m):
            g = [0] * d
            while not any(g):
                g = [rng.randint(-box, box) for _ in range(d)]
            rows.append(g + [rng.randint(-box * box, box * box)])
        arr = Arrangement.from_rows(rows, f"random arrangement d={d} m={m} seed={seed}")
        try:
            for _ in _candidate_vertices(arr):
                pass
        except NonGenericError:
            continue
        return arr
    raise GeometryError("failed to draw a generic arrangement")
