import math
import random
from fractions import Fraction as F
from itertools import combinations
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.spatial import Delaunay

from hefty.euclidean import (
    NonGenericError, PointSet, check_generic, covering_count, cover_split_check, enumerate_hefty,
    fixed_enclosed_disjointness, gen_pentagon, gen_radial, heft, heft_table, incident_at_most_k,
    interiors_disjoint,
    khull_member, local_covering_count, local_covering_profile, radial_compositions,
    random_generic_set, random_queries, tukey_depth, tukey_depths,
)
from hefty.numeric import GeometryError


def line(*xs):
    return PointSet(tuple((x,) for x in xs))


# ---------------------------------------------------------------- genericity

def test_check_generic_examples():
    assert check_generic(PointSet(((0, 0), (1, 0), (0, 1), (5, 7)))) is None
    w = check_generic(PointSet(((0, 0), (1, 1), (2, 2), (0, 1))))
    assert w.kind == "hyperplane" and w.indices == (0, 1, 2)
    w = check_generic(PointSet(((-1, 0), (1, 0), (0, 1), (0, -1))))
    assert w.kind == "sphere" and sorted(w.indices) == [0, 1, 2, 3]


def test_duplicate_points_rejected():
    with pytest.raises(GeometryError):
        PointSet(((0, 0), (0, 0)))


# ---------------------------------------------------------------- heft

def test_heft_on_a_line():
    ps = line(0, 1, 2, 3)
    assert heft(ps, (0, 3)).heft == 2
    assert [s.vertices for s in enumerate_hefty(ps, 1)] == [(0, 2), (1, 3)]


def test_table_matches_direct_heft():
    for d, n, seed in ((2, 12, 1), (3, 10, 2), (1, 9, 3), (4, 9, 4)):
        ps = random_generic_set(d, n, seed)
        t = heft_table(ps)
        for verts, h in zip(t.simplices, t.hefts):
            assert heft(ps, verts).heft == h


def test_parallel_table_matches_serial():
    ps = random_generic_set(3, 18, 5)
    a = heft_table(ps)
    b = heft_table(PointSet(ps.points), parallel=True)
    assert a.hefts == b.hefts and a.masks == b.masks


@pytest.mark.parametrize("d, n, seed", [(2, 15, 0), (2, 25, 1), (3, 14, 2), (3, 20, 3)])
def test_zero_hefty_simplices_are_the_delaunay_triangulation(d, n, seed):
    ps = random_generic_set(d, n, seed)
    pts = np.array([[float(x) for x in p] for p in ps])
    oracle = sorted(tuple(sorted(int(i) for i in s)) for s in Delaunay(pts).simplices)
    assert [s.vertices for s in enumerate_hefty(ps, 0)] == oracle


def _relabel(t, perm):
    return sorted((tuple(sorted(perm[i] for i in v)), h) for v, h in zip(t.simplices, t.hefts))


def test_invariance_under_permutation_translation_and_scaling():
    ps = random_generic_set(2, 11, 7)
    base = sorted(zip(heft_table(ps).simplices, heft_table(ps).hefts))
    rng = random.Random(1)
    perm = list(range(ps.n))
    rng.shuffle(perm)
    inv = {new: old for old, new in enumerate(perm)}
    shuffled = PointSet(tuple(ps[inv[i]] for i in range(ps.n)))
    assert _relabel(heft_table(shuffled), inv) == base
    moved = PointSet(tuple(tuple(F(3, 7) * x + F(-5, 3) for x in p) for p in ps))
    assert sorted(zip(heft_table(moved).simplices, heft_table(moved).hefts)) == base


def test_every_subset_gets_a_heft_once():
    ps = random_generic_set(2, 13, 11)
    t = heft_table(ps)
    assert sum(t.counts().values()) == comb(13, 3)
    assert all(bin(m).count("1") == h for h, m in zip(t.hefts, t.masks))


# ---------------------------------------------------------------- covering

def test_covering_examples():
    ps = random_generic_set(2, 20, 42)
    rng = random.Random(0)
    deep = [q for q in random_queries(ps, 50, rng) if tukey_depth(ps, q) >= 2]
    assert deep
    for q in deep[:5]:
        assert covering_count(ps, 0, q).count == 1
        assert covering_count(ps, 1, q).count == 3
    far = covering_count(ps, 1, (10 ** 9, 10 ** 9))
    assert far.count == 0 and far.count < far.expected


def test_query_on_a_point_is_rejected():
    ps = random_generic_set(2, 8, 1)
    with pytest.raises(GeometryError):
        covering_count(ps, 0, ps[0])


def test_boundary_queries_are_flagged():
    ps = random_generic_set(2, 10, 3)
    s = enumerate_hefty(ps, 0)[0]
    a, b = ps[s.vertices[0]], ps[s.vertices[1]]
    mid = tuple((x + y) / 2 for x, y in zip(a, b))
    assert covering_count(ps, 0, mid).boundary_flag


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10 ** 6), st.integers(6, 14), st.integers(0, 2))
def test_covering_number_inside_k_hull(seed, n, k):
    ps = random_generic_set(2, n, seed, box=200)
    rng = random.Random(seed)
    qs = random_queries(ps, 20, rng)
    for q, dep in zip(qs, tukey_depths(ps, qs)):
        rep = covering_count(ps, k, q)
        if rep.boundary_flag:
            continue
        if dep >= k + 1:
            assert rep.count == comb(2 + k, 2)
        else:
            assert rep.count < comb(2 + k, 2)


# ---------------------------------------------------------------- local covering

def test_pentagon_local_structure():
    ps = gen_pentagon()
    assert check_generic(ps) is None
    incident = [s for s in enumerate_hefty(ps, 1) if 0 in s.vertices]
    assert len(incident) == 5
    assert local_covering_count(ps, 1, 0) == 2
    assert not cover_split_check(incident, ps, 0, 2).decomposable


def test_delaunay_star_covers_once_and_splits():
    ps = random_generic_set(2, 15, 8)
    for v in range(ps.n):
        rest, _ = ps.without([v])
        if tukey_depth(rest, ps[v]) >= 1:
            assert local_covering_count(ps, 0, v) == 1
            star = [s for s in enumerate_hefty(ps, 0) if v in s.vertices]
            assert cover_split_check(star, ps, v, 1).decomposable


def test_local_count_on_a_line():
    # near an interior point of a 1-D set, heft-1 segments cover once from each side
    ps = line(0, 1, 2, 3, 4)
    assert local_covering_count(ps, 1, 2) == 1


def test_local_count_at_deep_vertices():
    ps = random_generic_set(2, 25, 13)
    for v in range(ps.n):
        rest, _ = ps.without([v])
        if tukey_depth(rest, ps[v]) >= 3:
            prof = local_covering_profile(ps, 1, v)
            assert prof.count == 2


# ---------------------------------------------------------------- depth

def _depth_by_sweep(ps, q):
    """Planar halfspace depth by testing normals between consecutive critical angles."""
    angles = []
    for p in ps:
        a = math.atan2(float(p[1] - q[1]), float(p[0] - q[0]))
        angles += [(a + math.pi / 2) % (2 * math.pi), (a - math.pi / 2) % (2 * math.pi)]
    angles.sort()
    best = len(ps)
    for a, b in zip(angles, angles[1:] + [angles[0] + 2 * math.pi]):
        t = (a + b) / 2
        nx, ny = math.cos(t), math.sin(t)
        best = min(best, sum(1 for p in ps if nx * float(p[0] - q[0]) + ny * float(p[1] - q[1]) > 0))
    return best


def test_depth_matches_angular_sweep():
    for seed in range(5):
        ps = random_generic_set(2, 15, seed)
        qs = random_queries(ps, 30, random.Random(seed))
        assert tukey_depths(ps, qs) == [_depth_by_sweep(ps, q) for q in qs]


def test_depth_examples():
    sq = PointSet(((1, 1), (1, -1), (-1, 1), (-1, -1)))
    assert tukey_depth(sq, (0, 0)) == 2
    ps = random_generic_set(2, 10, 4)
    assert tukey_depth(ps, (5000, 0)) == 0
    assert not khull_member(ps, 0, (5000, 0))
    hept = PointSet(tuple((round(1000 * math.cos(2 * math.pi * i / 7)) + i,
                           round(1000 * math.sin(2 * math.pi * i / 7))) for i in range(7)))
    c = tuple(sum(p[j] for p in hept) / 7 for j in range(2))
    assert tukey_depth(hept, c) >= 3 and khull_member(hept, 2, c)


def test_depth_in_three_dimensions_matches_brute_force():
    ps = random_generic_set(3, 9, 3)
    rng = random.Random(5)
    qs = random_queries(ps, 10, rng)
    got = tukey_depths(ps, qs)
    for q, dep in zip(qs, got):
        # the minimizing plane can be rotated onto two set points through q
        best = ps.n
        for a, b in combinations(range(ps.n), 2):
            u = [x - y for x, y in zip(ps[a], q)]
            v = [x - y for x, y in zip(ps[b], q)]
            nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
            s = [sum(c * (x - y) for c, x, y in zip(nrm, p, q)) for p in ps]
            pos, neg = sum(x > 0 for x in s), sum(x < 0 for x in s)
            best = min(best, pos, neg)
        assert dep == best


# ---------------------------------------------------------------- radial set and disjointness

def test_radial_set_layout():
    ps = gen_radial(2, 3)
    assert ps.n == 9 and check_generic(ps) is None
    assert heft(ps, (0, 3, 6)).heft == 0
    rep = covering_count(ps, 2, (0, 0))
    assert rep.count == 6 and all(s.heft == 2 for s in rep.witnesses)
    assert sorted(s.vertices for s in rep.witnesses) == radial_compositions(2, 3, 2)


@pytest.mark.parametrize("d, k", [(2, 1), (3, 2)])
def test_fixed_enclosed_sets_give_disjoint_simplices(d, k):
    ps = random_generic_set(d, 12 if d == 2 else 10, 21)
    assert fixed_enclosed_disjointness(ps, ())
    for b in {s.enclosed for s in enumerate_hefty(ps, k)}:
        assert fixed_enclosed_disjointness(ps, b)


def test_interiors_disjoint():
    t = [(0, 0), (2, 0), (0, 2)]
    assert interiors_disjoint(t, [(2, 0), (0, 2), (2, 2)])
    assert not interiors_disjoint(t, [(1, 1), (-1, 0), (0, -1)])
    assert not interiors_disjoint(t, [(F(1, 4), F(1, 4)), (1, F(1, 4)), (F(1, 4), 1)])


def test_generator_rejects_degenerate_input():
    with pytest.raises(NonGenericError):
        heft_table(PointSet(((0, 0), (1, 1), (2, 2), (5, 0))))


@pytest.mark.parametrize("d, n", [(1, 12), (2, 18), (3, 13)])
def test_deep_vertex_has_enough_incident_simplices(d, n):
    for seed in range(4):
        ps = random_generic_set(d, n, seed)
        v = max(range(n), key=lambda i: tukey_depth(ps.without([i])[0], ps[i]))
        for k in range(tukey_depth(ps.without([v])[0], ps[v])):
            r = incident_at_most_k(ps, k, v)
            assert r.local == comb(d + k, d)
            assert r.ok and r.lower_bound == 2 * comb(d + k, d) + (d > 1)
