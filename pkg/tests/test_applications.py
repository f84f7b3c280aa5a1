import random
from fractions import Fraction as F
from itertools import combinations
from math import comb

import pytest

from hefty.applications import (
    Arrangement, cells_containing, enumerate_chambers, eulerian, eulerian_by_scan, facet_counts,
    facet_transfer, gen_hexmesh, heft_census, hemisphere_chambers, hypersimplex_identity_check,
    hypersimplex_relative_volume, invert, k_facets, level_maxima, level_minima, level_value,
    line_entry_count, order_n_mosaic_cells, perturbed_hexmesh, random_arrangement,
    regular_polygon_normals, sphere_chambers, worpitzky_check,
)
from hefty.applications.chambers import BoxTooSmall
from hefty.euclidean import PointSet, enumerate_hefty, random_generic_set, tukey_depth
from hefty.spherical import SphericalPoint


# ---------------------------------------------------------------- facets

def test_inversion():
    assert invert((0, 0), PointSet(((2, 0),))).points == ((F(1, 2), 0),)


def _convex_polygon(n):
    return PointSet(tuple((i, i * i) for i in range(n)))


def test_hull_edges_are_zero_facets():
    for n in (5, 8):
        assert facet_counts(_convex_polygon(n), 0) == [n]


def test_each_subset_is_counted_once_per_side():
    ps = random_generic_set(2, 9, 2)
    counts = facet_counts(ps, ps.n - 2)
    assert sum(counts) == 2 * comb(9, 2)
    assert counts == counts[::-1]


def test_line_through_the_hull_enters_one_hull_edge():
    ps = _convex_polygon(6)
    assert line_entry_count(ps, 0, (F(5, 2), F(100)), (F(1, 100), -1)) == 1
    assert line_entry_count(ps, 0, (F(5, 2), F(100)), (F(-1, 100), 1)) == 1
    assert line_entry_count(ps, 0, (F(5, 2), F(100)), (1, F(1, 100))) == 0


def test_facets_match_simplices_after_inversion():
    ps = random_generic_set(2, 9, 5)
    for ft in facet_transfer(ps, (F(1, 3), F(-2, 7)), 2):
        assert ft.ok


def test_line_entries_within_bound():
    rng = random.Random(1)
    ps = random_generic_set(3, 9, 6)
    for k in range(3):
        o = tuple(F(rng.randint(-900, 900), 11) for _ in range(3))
        u = (F(1), F(2, 3), F(-5, 7))
        assert line_entry_count(ps, k, o, u) <= comb(3 + k - 1, 2)
        assert len(k_facets(ps, k)) == facet_counts(ps, k)[k]


# ---------------------------------------------------------------- levels

def test_level_examples():
    single = Arrangement.from_rows([(2, 1)])
    assert level_minima(single, 0) == []
    vee = Arrangement.from_rows([(1, 0), (-1, 0)])
    assert level_minima(vee, 0) == [(0,)]
    assert level_value(vee, 0, (3,)) == 3


def _minima_1d(arr, k):
    xs = sorted({(g.offset - f.offset) / (f.gradient[0] - g.gradient[0])
                 for f, g in combinations(arr, 2) if f.gradient != g.gradient})
    eps = F(1, 10 ** 6) * (1 + max(abs(x) for x in xs)) if xs else F(1)
    gaps = [b - a for a, b in zip(xs, xs[1:])]
    if gaps:
        eps = min(eps, min(gaps) / 4)
    out = []
    for x in xs:
        c = level_value(arr, k, (x,))
        if level_value(arr, k, (x - eps,)) > c < level_value(arr, k, (x + eps,)):
            out.append((x,))
    return out


@pytest.mark.parametrize("seed", range(6))
def test_level_minima_match_direct_evaluation(seed):
    arr = random_arrangement(1, 7, seed)
    for k in range(5):
        assert sorted(level_minima(arr, k)) == _minima_1d(arr, k)


def test_maxima_are_minima_of_a_lower_level():
    arr = random_arrangement(2, 8, 3)
    assert level_maxima(arr, 1) == []
    assert level_maxima(arr, 4) == level_minima(arr, 2)


# ---------------------------------------------------------------- chambers

def test_points_on_a_line_give_one_more_chamber():
    arr = Arrangement.from_rows([(1, -i) for i in range(5)])
    chambers = enumerate_chambers(arr)
    assert len(chambers) == 6
    assert sorted(c.heft for c in chambers) == [0, 1, 2, 3, 4, 5]


@pytest.mark.parametrize("d, m, seed", [(2, 6, 0), (2, 8, 1), (3, 6, 2)])
def test_generic_arrangement_chamber_count(d, m, seed):
    chambers = enumerate_chambers(random_arrangement(d, m, seed))
    assert len(chambers) == sum(comb(m, i) for i in range(d + 1))
    for c in chambers:
        vals = random_arrangement(d, m, seed).values(c.witness_point)
        assert tuple(1 if v > 0 else -1 for v in vals) == c.sign_vector
        assert all(v != 0 for v in vals)


@pytest.mark.parametrize("d, k, want", [(2, 3, 10), (1, 2, 3), (3, 1, 4)])
def test_hexmesh_minimum_heft(d, k, want):
    census = heft_census(enumerate_chambers(gen_hexmesh(d, k)))
    assert min(census) == k and census[k] == want


def test_perturbed_hexmesh_stays_within_bound():
    census = heft_census(enumerate_chambers(perturbed_hexmesh(2, 2, 4)))
    m = min(census)
    assert census[m] <= comb(2 + m, 2)


def test_box_must_hold_every_vertex():
    with pytest.raises(BoxTooSmall):
        enumerate_chambers(gen_hexmesh(2, 2), bounding_box=F(1, 10))


def test_hemisphere_examples():
    tri = hemisphere_chambers(regular_polygon_normals(3))
    assert tri.census == {1: 3, 2: 3}
    pent = hemisphere_chambers(regular_polygon_normals(5))
    assert pent.min_heft == 2 and pent.min_count == 5 == pent.general_bound


def test_sphere_chambers_on_s2():
    normals = [SphericalPoint(v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    chambers = sphere_chambers(normals)
    assert len(chambers) == 8
    assert heft_census(chambers) == {0: 1, 1: 3, 2: 3, 3: 1}


# ---------------------------------------------------------------- identities

def test_eulerian_values():
    assert eulerian(4).values == (1, 11, 11, 1)
    assert eulerian(5).values == eulerian_by_scan(5).values == (1, 26, 66, 26, 1)


def test_hypersimplex_volume():
    assert hypersimplex_relative_volume(3, 2) == 4
    assert [hypersimplex_relative_volume(4, p) for p in range(1, 5)] == [1, 11, 11, 1]


def test_identity_checks():
    w = worpitzky_check(5, 7)
    assert w.ok and w.lhs == w.rhs == 7 ** 5
    assert hypersimplex_identity_check(4, 3).ok


# ---------------------------------------------------------------- mosaic

def test_order_one_mosaic_is_delaunay():
    ps = random_generic_set(2, 12, 3)
    cells = order_n_mosaic_cells(ps, 1)
    assert sorted(c.source.vertices for c in cells) == [s.vertices for s in enumerate_hefty(ps, 0)]
    for c in cells:
        assert c.vertices == tuple(ps[i] for i in c.source.vertices)


def test_deep_points_lie_in_one_cell():
    ps = random_generic_set(2, 12, 9)
    cells = order_n_mosaic_cells(ps, 2)
    assert {c.p for c in cells} == {1, 2}
    rng = random.Random(2)
    hits = 0
    while hits < 10:
        q = (F(rng.randint(-400, 400)), F(rng.randint(-400, 400), 3))
        if tukey_depth(ps, q) < 2:
            continue
        inside, boundary = cells_containing(cells, q)
        if not boundary:
            assert len(inside) == 1
            hits += 1
