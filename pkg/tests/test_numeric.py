from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from hefty.numeric import (
    DegenerateError, Location, Sign, SingularMatrixError, circumsphere, determinant, in_sphere,
    orientation, point, point_in_simplex, scalar, solve_linear,
)

TRI = [(0, 0), (4, 0), (0, 4)]


def test_scalar_parsing():
    assert scalar("3") == 3
    assert scalar("-2/7") == F(-2, 7)
    assert scalar("0.1") == F(1, 10)
    assert scalar("1e-3") == F(1, 1000)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        scalar(0.5)
    with pytest.raises(TypeError):
        point(1, 0.5)


@pytest.mark.parametrize("pts, want", [
    ([(0, 0), (1, 0), (0, 1)], Sign.POSITIVE),
    ([(0, 0), (1, 1), (2, 2)], Sign.ZERO),
    ([(0, 0), (0, 1), (1, 0)], Sign.NEGATIVE),
])
def test_orientation(pts, want):
    assert orientation(pts) == want


@pytest.mark.parametrize("q, want", [((2, 2), Sign.POSITIVE), ((4, 4), Sign.ZERO), ((5, 5), Sign.NEGATIVE)])
def test_in_sphere(q, want):
    assert in_sphere(TRI, q) == want
    assert in_sphere(TRI[::-1], q) == want


def test_in_sphere_in_three_dimensions():
    tet = [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)]
    assert in_sphere(tet, (1, 1, 1)) == Sign.POSITIVE
    assert in_sphere(tet, (2, 2, 0)) == Sign.ZERO
    assert in_sphere(tet, (3, 3, 3)) == Sign.NEGATIVE
    assert in_sphere([tet[1], tet[0]] + tet[2:], (1, 1, 1)) == Sign.POSITIVE


def test_in_sphere_rejects_flat_simplex():
    with pytest.raises(DegenerateError):
        in_sphere([(0, 0), (1, 1), (2, 2)], (0, 1))


@pytest.mark.parametrize("pts, center, r2", [
    (TRI, (2, 2), 8),
    ([(0,), (2,)], (1,), 1),
    ([(-1, 0), (1, 0), (0, 1)], (0, 0), 1),
])
def test_circumsphere(pts, center, r2):
    s = circumsphere(pts)
    assert s.center == point(center)
    assert s.squared_radius == r2


@pytest.mark.parametrize("q, want", [
    ((F(1, 4), F(1, 4)), Location.INTERIOR),
    ((F(1, 2), F(1, 2)), Location.BOUNDARY),
    ((1, 1), Location.OUTSIDE),
])
def test_point_in_simplex(q, want):
    assert point_in_simplex([(0, 0), (1, 0), (0, 1)], q) is want


def test_solve_linear():
    assert solve_linear([[1, 0], [0, 1]], [3, 5]) == (3, 5)
    assert solve_linear([[2, 0], [0, 4]], [1, 1]) == (F(1, 2), F(1, 4))
    with pytest.raises(SingularMatrixError):
        solve_linear([[1, 1], [1, 1]], [1, 2])


def _laplace(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * _laplace([r[:j] + r[j + 1:] for r in m[1:]]) for j in range(len(m)))


small = st.fractions(min_value=-20, max_value=20, max_denominator=9)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(small, min_size=n, max_size=n),
                                                     min_size=n, max_size=n)))
def test_determinant_matches_cofactor_expansion(m):
    assert determinant(m) == _laplace(m)


@given(st.lists(st.tuples(small, small), min_size=3, max_size=3), st.tuples(small, small))
def test_in_sphere_matches_circumsphere_distance(tri, q):
    if orientation(tri) == Sign.ZERO:
        return
    s = circumsphere(tri)
    dist = sum((a - b) ** 2 for a, b in zip(point(q), s.center))
    assert in_sphere(tri, q) == Sign.of(s.squared_radius - dist)
