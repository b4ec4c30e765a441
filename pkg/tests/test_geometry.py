import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from equistick.geometry import check_embedding, edge_lengths, pairwise_segment_distances, segment_distance

from oracles import brute_force_clearance, sampled_segment_distance
from oracles import segment_distance as scalar_distance

coords = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
points = st.tuples(coords, coords, coords)


def test_parallel_offset_segments():
    assert segment_distance((0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)) == 1.0


def test_skew_perpendicular_segments():
    assert segment_distance((-1, 0, 0), (1, 0, 0), (0, -1, 2), (0, 1, 2)) == 2.0


def test_endpoint_to_interior():
    assert segment_distance((0, 0, 0), (1, 0, 0), (3, 0, 0), (4, 0, 0)) == 2.0
    assert math.isclose(segment_distance((0, 0, 0), (2, 0, 0), (1, 1, 0), (1, 5, 0)), 1.0)


def test_touching_segments_have_zero_distance():
    assert segment_distance((0, 0, 0), (2, 0, 0), (1, -1, 0), (1, 1, 0)) == 0.0


def test_unit_square_clearance():
    r = check_embedding([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)], edge_length=1.0)
    assert r.min_clearance == 1.0
    assert r.max_length_deviation == 0.0
    assert r.embedded


def test_triangle_has_no_nonadjacent_pairs():
    r = check_embedding([(0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert r.min_clearance == math.inf
    assert r.witness is None


def test_self_intersection_detected():
    # bow tie: edges 0 and 2 cross at the centre
    r = check_embedding([(0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 1, 0)])
    assert r.min_clearance == 0.0
    assert not r.embedded
    assert r.witness == (0, 2)


def test_fold_back_detected():
    r = check_embedding([(0, 0, 0), (2, 0, 0), (1, 0, 0), (1, 1, 1)])
    assert (0, 1) in r.folded_pairs
    assert not r.embedded


def test_duplicate_vertex_is_zero_clearance():
    r = check_embedding([(0, 0, 0), (0, 0, 0), (1, 0, 0), (0, 1, 0)])
    assert r.min_clearance == 0.0


def test_edge_lengths():
    assert list(edge_lengths([(0, 0, 0), (3, 0, 0), (3, 4, 0)])) == [3.0, 4.0, 5.0]


@given(points, points, points, points)
def test_vectorised_distance_equals_scalar_bitwise(p1, q1, p2, q2):
    if p1 == q1 or p2 == q2:
        return
    assert segment_distance(p1, q1, p2, q2) == scalar_distance(p1, q1, p2, q2)


@given(points, points, points, points)
def test_distance_is_symmetric_and_bounded(p1, q1, p2, q2):
    if p1 == q1 or p2 == q2:
        return
    d = segment_distance(p1, q1, p2, q2)
    assert d >= 0.0
    assert d <= min(math.dist(a, b) for a in (p1, q1) for b in (p2, q2)) + 1e-12
    assert math.isclose(d, segment_distance(p2, q2, p1, q1), rel_tol=1e-9, abs_tol=1e-9)


@pytest.mark.parametrize("seed", range(10))
def test_distance_against_dense_sampling(seed):
    rng = np.random.default_rng(seed)
    p1, q1, p2, q2 = rng.normal(size=(4, 3))
    exact = segment_distance(p1, q1, p2, q2)
    sampled = sampled_segment_distance(p1, q1, p2, q2)
    assert exact <= sampled + 1e-12
    assert sampled - exact < 0.05


def test_broadcasting_shapes():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(7, 4, 3))
    d = pairwise_segment_distances(a[:, 0], a[:, 1], a[:, 2], a[:, 3])
    assert d.shape == (7,)


@pytest.mark.parametrize("seed", range(20))
def test_clearance_equals_brute_force(seed):
    rng = np.random.default_rng(seed)
    verts = rng.normal(size=(int(rng.integers(4, 30)), 3))
    assert check_embedding(verts).min_clearance == brute_force_clearance(verts)
