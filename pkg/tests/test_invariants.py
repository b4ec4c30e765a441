from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equistick.arcpres import validate
from equistick.diagram import arcpres_to_diagram, parse_pd
from equistick.errors import TooManyCrossings
from equistick.invariants import (
    bareiss_determinant,
    determinant,
    faces,
    goeritz_matrix,
    jones_polynomial,
    kauffman_bracket,
    state_sum_bracket,
)
from equistick.laurent import LaurentPolynomial as LP, equal_up_to_mirror

from conftest import presentations

TREFOIL_JONES = LP({-4: -1, -3: 1, -1: 1})
FIGURE_EIGHT_JONES = LP({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
FIGURE_EIGHT = [(1, 3), (2, 5), (4, 6), (3, 5), (1, 4), (2, 6)]


def fraction_det(m):
    """Plain Gaussian elimination over the rationals."""
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        pivot = next((r for r in range(k, n) if a[r][k] != 0), None)
        if pivot is None:
            return 0
        if pivot != k:
            a[k], a[pivot] = a[pivot], a[k]
            det = -det
        det *= a[k][k]
        for r in range(k + 1, n):
            f = a[r][k] / a[k][k]
            for c in range(k, n):
                a[r][c] -= f * a[k][c]
    return det


def test_trefoil_jones(trefoil):
    j = jones_polynomial(arcpres_to_diagram(trefoil))
    assert equal_up_to_mirror(j, TREFOIL_JONES)


def test_figure_eight_jones_is_amphichiral():
    j = jones_polynomial(arcpres_to_diagram(validate(FIGURE_EIGHT)))
    assert j == FIGURE_EIGHT_JONES
    assert j == j.mirror()


def test_state_sum_trefoil_by_hand():
    # positive trefoil diagram: <D> = A^-7 - A^-3 - A^5
    d = parse_pd("X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]")
    assert state_sum_bracket(d) == LP({-7: 1, -3: -1, 5: -1})
    assert kauffman_bracket(d) == state_sum_bracket(d)


def test_unknot_bracket_is_one():
    d = arcpres_to_diagram(validate([(1, 2), (1, 2)]))
    assert kauffman_bracket(d) == 1
    assert state_sum_bracket(d) == 1


def test_state_sum_limit(trefoil):
    d = arcpres_to_diagram(trefoil)
    with pytest.raises(TooManyCrossings):
        state_sum_bracket(d, max_crossings=d.num_crossings - 1)
    with pytest.raises(TooManyCrossings):
        kauffman_bracket(d, max_crossings=d.num_crossings - 1)


@given(presentations(max_n=7))
def test_contraction_matches_state_sum(p):
    d = arcpres_to_diagram(p)
    if d.num_crossings > 14:
        return
    assert kauffman_bracket(d) == state_sum_bracket(d, max_crossings=14)


def test_faces_satisfy_euler(trefoil):
    d = arcpres_to_diagram(trefoil)
    fs = faces(d)
    assert len(fs) == d.num_crossings + 2
    assert sum(len(f) for f in fs) == 4 * d.num_crossings


def test_goeritz_is_symmetric_with_zero_row_sums(trefoil):
    g = goeritz_matrix(arcpres_to_diagram(trefoil))
    for i, row in enumerate(g):
        assert sum(row) == 0
        for j, v in enumerate(row):
            assert v == g[j][i]


@pytest.mark.parametrize("arcs, det", [(None, 3), (FIGURE_EIGHT, 5), ([(1, 2), (1, 2)], 1)])
def test_known_determinants(trefoil, arcs, det):
    p = trefoil if arcs is None else validate(arcs)
    assert determinant(arcpres_to_diagram(p)) == det


@given(presentations(max_n=7))
def test_determinant_is_jones_at_minus_one(p):
    d = arcpres_to_diagram(p)
    assert determinant(d) == abs(jones_polynomial(d).evaluate(-1))


@given(st.lists(st.lists(st.integers(-6, 6), min_size=5, max_size=5), min_size=5, max_size=5),
       st.integers(1, 5))
def test_bareiss_matches_rational_elimination(rows, size):
    m = [r[:size] for r in rows[:size]]
    assert bareiss_determinant(m) == fraction_det(m)


def test_bareiss_empty_and_singular():
    assert bareiss_determinant([]) == 1
    assert bareiss_determinant([[1, 2], [2, 4]]) == 0
