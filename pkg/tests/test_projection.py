import math

import numpy as np
import pytest

from equistick.diagram import PlanarDiagram
from equistick.errors import NoGenericProjection, NotEmbedded
from equistick.invariants import determinant, jones_polynomial
from equistick.laurent import LaurentPolynomial as LP
from equistick.projection import ProjectionTolerances, polygon_to_diagram, project, projection_frame

RIGHT_TREFOIL = LP({1: 1, 3: 1, 4: -1})


def torus_knot(p, q, samples=90, R=2.0, r=1.0):
    t = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    return np.stack(
        [(R + r * np.cos(q * t)) * np.cos(p * t), (R + r * np.cos(q * t)) * np.sin(p * t), r * np.sin(q * t)],
        axis=1,
    )


def test_frame_is_right_handed_orthonormal():
    u, v, w = projection_frame([0.3, -1.0, 2.0])
    assert np.allclose([u @ u, v @ v, w @ w], 1)
    assert np.allclose([u @ v, v @ w, u @ w], 0)
    assert np.allclose(np.cross(u, v), w)


def test_triangle_has_no_crossings():
    d = polygon_to_diagram([(0, 0, 0), (1, 0, 0), (0, 1, 0)], seed=3)
    assert d.num_crossings == 0


def test_square_has_no_crossings():
    d = polygon_to_diagram([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)])
    assert d.num_crossings == 0


def test_edge_on_view_is_rejected():
    # looking along the x axis the first edge collapses to a point
    square = np.array([(0, 0, 0), (1, 0, 0), (1, 1, 0), (0, 1, 0)], float)
    assert project(square, [1.0, 0.0, 0.0], 1e-9, 1e-3) is None


def test_torus_trefoil_seen_from_above():
    verts = torus_knot(2, 3)
    res = project(verts, [0.01, 0.02, 1.0], 1e-9, 1e-3)
    assert res is not None
    d = PlanarDiagram.from_gauss(*res)
    assert d.num_crossings == 3
    # every crossing has the same sign, and that sign fixes the chirality
    assert abs(d.writhe) == 3
    expected = RIGHT_TREFOIL if d.writhe > 0 else RIGHT_TREFOIL.mirror()
    assert jones_polynomial(d) == expected


@pytest.mark.parametrize("seed", range(5))
def test_random_directions_agree_on_knot_type(seed):
    d = polygon_to_diagram(torus_knot(2, 3), seed=seed)
    j = jones_polynomial(d)
    assert j in (RIGHT_TREFOIL, RIGHT_TREFOIL.mirror())
    assert determinant(d) == 3


def test_mirror_image_mirrors_jones():
    verts = torus_knot(2, 3)
    mirrored = verts * np.array([1, 1, -1])
    assert jones_polynomial(polygon_to_diagram(mirrored)) == jones_polynomial(polygon_to_diagram(verts)).mirror()


def test_non_embedded_polygon_is_refused():
    with pytest.raises(NotEmbedded):
        polygon_to_diagram([(0, 0, 0), (1, 1, 0), (1, 0, 0), (0, 1, 0)])


def test_retry_budget_exhaustion():
    tight = ProjectionTolerances(angle=math.pi / 2, angle_clearance=1e9, retries=3)
    with pytest.raises(NoGenericProjection):
        polygon_to_diagram(torus_knot(2, 3), tolerances=tight)


def test_same_seed_same_diagram():
    verts = torus_knot(2, 5)
    assert polygon_to_diagram(verts, seed=4) == polygon_to_diagram(verts, seed=4)
