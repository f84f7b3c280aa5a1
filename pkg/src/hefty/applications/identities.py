"""Eulerian numbers, hypersimplex volumes and the two polynomial identities tying them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

__all__ = [
    "EulerianTable", "eulerian", "eulerian_by_scan", "hypersimplex_relative_volume",
    "IdentityCheck", "worpitzky_check", "hypersimplex_identity_check",
]


@dataclass(frozen=True)
class EulerianTable:
    d: int
    values: tuple      # A(d, 0) .. A(d, d-1)

    def __getitem__(self, k):
        return self.values[k] if 0 <= k < self.d else 0


@lru_cache(maxsize=None)
def _eulerian_row(d: int) -> tuple:
    if d == 1:
        return (1,)
    prev = _eulerian_row(d - 1)
    row = []
    for k in range(d):
        a = (k + 1) * prev[k] if k < d - 1 else 0
        b = (d - k) * prev[k - 1] if k >= 1 else 0
        row.append(a + b)
    return tuple(row)


def eulerian(d: int) -> EulerianTable:
    """A(d, k) via A(d,k) = (k+1) A(d-1,k) + (d-k) A(d-1,k-1)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return EulerianTable(d, _eulerian_row(d))


def eulerian_by_scan(d: int) -> EulerianTable:
    """Count descents over all d! permutations; only sensible for small d."""
    counts = [0] * d
    for perm in permutations(range(1, d + 1)):
        counts[sum(1 for a, b in zip(perm, perm[1:]) if a > b)] += 1
    return EulerianTable(d, tuple(counts))


def _slab_cdf(d: int, t: int) -> Fraction:
    """Volume of {x in [0,1]^d : sum(x) <= t}."""
    total = sum((-1) ** j * comb(d, j) * (t - j) ** d for j in range(d + 1) if t - j > 0)
    return Fraction(total, factorial(d))


def hypersimplex_relative_volume(d: int, p: int) -> Fraction:
    """Volume of the order-p hypersimplex over that of its simplex.

    Uses the unit-cube slab p-1 <= sum(x) <= p, which is the order-p
    hypersimplex after dropping one barycentric coordinate; the slab for p = 1
    is the simplex itself, of volume 1/d!.
    """
    if not 1 <= p <= d:
        raise ValueError("need 1 <= p <= d")
    return (_slab_cdf(d, p) - _slab_cdf(d, p - 1)) * factorial(d)


@dataclass(frozen=True)
class IdentityCheck:
    d: int
    n: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self):
        return self.ok


def worpitzky_check(d: int, n: int) -> IdentityCheck:
    """sum_k A(d,k) C(n+k, d) against n^d."""
    table = eulerian(d)
    lhs = sum(table[k] * comb(n + k, d) for k in range(d))
    return IdentityCheck(d, n, lhs, n ** d)


def hypersimplex_identity_check(d: int, n: int) -> IdentityCheck:
    """sum_p v(d,p) C(n+d-p, n-p) against n^d, with the binomial 0 when n < p."""
    lhs = Fraction(0)
    for p in range(1, d + 1):
        if n - p >= 0:
            lhs += hypersimplex_relative_volume(d, p) * comb(n + d - p, n - p)
    if lhs.denominator != 1:
        raise ArithmeticError("relative volumes should be integers")
    return IdentityCheck(d, n, int(lhs), n ** d)
