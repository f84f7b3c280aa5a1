"""Exact scalars, small dense linear algebra and the basic sign predicates.

Every coordinate is a :class:`fractions.Fraction`.  Floats are refused at the
boundary so that no binary rounding ever reaches a predicate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Sequence

Scalar = Fraction
Point = tuple  # tuple[Fraction, ...]

__all__ = [
    "Scalar", "Point", "Sign", "Location", "Sphere",
    "GeometryError", "DimensionMismatch", "DegenerateError", "SingularMatrixError",
    "scalar", "point", "points", "determinant", "solve_linear",
    "orientation", "in_sphere", "circumsphere", "point_in_simplex",
    "squared_distance", "dot", "sub", "integerize",
]


class GeometryError(ValueError):
    """Base class for invalid geometric input."""


class DimensionMismatch(GeometryError):
    pass


class DegenerateError(GeometryError):
    """A predicate evaluated to zero where genericity was required.

    ``witness`` is the offending tuple (point indices when known, else points).
    """

    def __init__(self, message, witness=()):
        super().__init__(f"{message}: {witness!r}" if witness else message)
        self.witness = tuple(witness)


class SingularMatrixError(GeometryError):
    pass


class Sign(enum.IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    @classmethod
    def of(cls, value) -> "Sign":
        return cls((value > 0) - (value < 0))


class Location(enum.Enum):
    INTERIOR = "interior"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


@dataclass(frozen=True)
class Sphere:
    center: Point
    squared_radius: Fraction


def scalar(value) -> Fraction:
    """Convert ints, Fractions or exact strings ("3", "-2/7", "0.1", "1e-3")."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"refusing inexact or unknown scalar {value!r} ({type(value).__name__})")


def point(*coords) -> Point:
    if len(coords) == 1 and not isinstance(coords[0], (int, str, Fraction)):
        coords = tuple(coords[0])
    if not coords:
        raise DimensionMismatch("points need at least one coordinate")
    return tuple(scalar(c) for c in coords)


def points(rows) -> list:
    return [point(r) for r in rows]


def sub(a: Point, b: Point) -> Point:
    return tuple(x - y for x, y in zip(a, b))


def dot(a, b):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def squared_distance(a: Point, b: Point) -> Fraction:
    return sum(((x - y) ** 2 for x, y in zip(a, b)), Fraction(0))


def _check_dims(pts: Sequence[Point], d: int | None = None) -> int:
    if not pts:
        raise DimensionMismatch("no points given")
    d = len(pts[0]) if d is None else d
    for p in pts:
        if len(p) != d:
            raise DimensionMismatch(f"expected dimension {d}, got {len(p)}")
    return d


def integerize(rows) -> tuple[int, list[list[int]]]:
    """Scale rational rows by the lcm of all denominators; returns (scale, int rows)."""
    scale = 1
    for row in rows:
        for x in row:
            scale = lcm(scale, Fraction(x).denominator)
    return scale, [[int(Fraction(x) * scale) for x in row] for row in rows]


def _bareiss(m: list[list[int]]) -> int:
    d = len(m)
    if d == 0:
        return 1
    sign, prev = 1, 1
    for k in range(d - 1):
        if m[k][k] == 0:
            for r in range(k + 1, d):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = m[k][k]
        for i in range(k + 1, d):
            mik = m[i][k]
            for j in range(k + 1, d):
                m[i][j] = (m[i][j] * piv - mik * m[k][j]) // prev
        prev = piv
    return sign * m[d - 1][d - 1]


def determinant(matrix) -> Fraction:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first cleared of denominators, so elimination runs on integers.
    """
    rows = [[scalar(x) for x in row] for row in matrix]
    d = len(rows)
    if any(len(r) != d for r in rows):
        raise DimensionMismatch("determinant needs a square matrix")
    denom = 1
    ints = []
    for row in rows:
        s = 1
        for x in row:
            s = lcm(s, x.denominator)
        denom *= s
        ints.append([int(x * s) for x in row])
    return Fraction(_bareiss(ints), denom)


def solve_linear(matrix, rhs) -> tuple:
    """Exact solution of ``matrix @ x = rhs``; raises SingularMatrixError."""
    a = [[scalar(x) for x in row] for row in matrix]
    b = [scalar(x) for x in rhs]
    n = len(a)
    if any(len(r) != n for r in a) or len(b) != n:
        raise DimensionMismatch("solve_linear needs a square system")
    aug = [row + [v] for row, v in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError(f"matrix is singular (column {col})")
        aug[col], aug[piv] = aug[piv], aug[col]
        pr = aug[col]
        inv = 1 / pr[col]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col] * inv
                row = aug[r]
                for c in range(col, n + 1):
                    row[c] -= f * pr[c]
    return tuple(aug[i][n] / aug[i][i] for i in range(n))


def orientation(pts: Sequence[Point]) -> Sign:
    """Sign of det[p_1 - p_0, ..., p_d - p_0] for d+1 points in R^d."""
    pts = [point(p) for p in pts]
    d = _check_dims(pts)
    if len(pts) != d + 1:
        raise DimensionMismatch(f"orientation needs {d + 1} points in R^{d}, got {len(pts)}")
    return Sign.of(determinant([sub(p, pts[0]) for p in pts[1:]]))


def in_sphere(simplex: Sequence[Point], query) -> Sign:
    """POSITIVE if ``query`` is strictly inside the circumsphere, ZERO on it, NEGATIVE outside.

    Evaluated as the sign of the lifted (d+2)x(d+2) determinant, corrected by
    the orientation of the simplex.
    """
    pts = [point(p) for p in simplex]
    q = point(query)
    d = _check_dims(pts + [q])
    if len(pts) != d + 1:
        raise DimensionMismatch(f"in_sphere needs {d + 1} simplex points in R^{d}")
    o = orientation(pts)
    if o == Sign.ZERO:
        raise DegenerateError("degenerate simplex", pts)
    lifted = [list(p) + [dot(p, p), 1] for p in pts] + [list(q) + [dot(q, q), 1]]
    # lifted = (-1)^(d+1) * orient * power(q); power < 0 inside
    parity = 1 if d % 2 == 0 else -1
    return Sign.of(determinant(lifted) * parity * int(o))


def circumsphere(simplex: Sequence[Point]) -> Sphere:
    pts = [point(p) for p in simplex]
    d = _check_dims(pts)
    if len(pts) != d + 1:
        raise DimensionMismatch(f"circumsphere needs {d + 1} points in R^{d}")
    p0 = pts[0]
    edges = [sub(p, p0) for p in pts[1:]]
    try:
        rel = solve_linear([[2 * x for x in e] for e in edges], [dot(e, e) for e in edges])
    except SingularMatrixError:
        raise DegenerateError("degenerate simplex", pts) from None
    center = tuple(a + b for a, b in zip(p0, rel))
    return Sphere(center, dot(rel, rel))


def point_in_simplex(simplex: Sequence[Point], query) -> Location:
    pts = [point(p) for p in simplex]
    q = point(query)
    d = _check_dims(pts + [q])
    if len(pts) != d + 1:
        raise DimensionMismatch(f"point_in_simplex needs {d + 1} points in R^{d}")
    o = orientation(pts)
    if o == Sign.ZERO:
        raise DegenerateError("degenerate simplex", pts)
    zero = False
    for i in range(d + 1):
        s = orientation(pts[:i] + [q] + pts[i + 1:])
        if s == Sign.ZERO:
            zero = True
        elif s != o:
            return Location.OUTSIDE
    return Location.BOUNDARY if zero else Location.INTERIOR
