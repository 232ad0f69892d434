from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrtopo.exactlin import (
    EMPTY,
    DimensionMismatch,
    canonicalize,
    contains,
    dimension,
    from_point_directions,
    full_space,
    intersect,
    parametrize,
)


def test_canonicalize_forced_point():
    s = canonicalize([[1, 0], [0, 1]], [0, 0], 2)
    assert s.dimension == 0
    assert s.satisfied_by([0, 0])


def test_canonicalize_inconsistent():
    assert canonicalize([[1, 1], [2, 2]], [1, 3], 2) is EMPTY


def test_canonicalize_normalizes_pivot():
    s = canonicalize([[2, 0]], [4], 2)
    assert s.rows == ((1, 0),) and s.rhs == (2,)
    assert s.dimension == 1


def test_canonicalize_rejects_bad_rows():
    with pytest.raises(DimensionMismatch):
        canonicalize([[1, 0, 0]], [0], 2)
    with pytest.raises(TypeError):
        canonicalize([[0.5, 0]], [0], 2)


def test_intersect_axes_and_parallels():
    x_axis, y_axis = canonicalize([[0, 1]], [0], 2), canonicalize([[1, 0]], [0], 2)
    assert intersect(x_axis, y_axis) == canonicalize([[1, 0], [0, 1]], [0, 0], 2)
    assert intersect(x_axis, canonicalize([[0, 1]], [1], 2)) is EMPTY


def test_intersect_planes_in_q3():
    z0 = canonicalize([[0, 0, 1]], [0], 3)
    diag = canonicalize([[1, -1, 0]], [0], 3)
    line = intersect(z0, diag)
    # hand elimination: x - y = 0 keeps pivot x, z = 0 keeps pivot z
    assert line.rows == ((1, -1, 0), (0, 0, 1)) and line.rhs == (0, 0)
    assert line.dimension == 1


def test_intersect_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        intersect(full_space(2), full_space(3))


def test_contains():
    z0 = canonicalize([[0, 0, 1]], [0], 3)
    assert contains(z0, canonicalize([[0, 0, 1], [1, 0, 0]], [0, 0], 3))
    assert not contains(canonicalize([[0, 1]], [0], 2), canonicalize([[1, 0]], [0], 2))


def test_dimension():
    assert dimension(canonicalize([[1, 0], [0, 1]], [3, 4], 2)) == 0
    assert dimension(canonicalize([[1, 0, 0, 0]], [0], 4)) == 3
    assert dimension(full_space(3)) == 3


def test_empty_is_singleton():
    from arrtopo.exactlin import EmptySet

    assert EmptySet() is EMPTY and not EMPTY


def test_point_directions_round_trip():
    s = from_point_directions(["1", "2", "3"], [["1", "1", "0"]])
    assert s.dimension == 1
    assert s.satisfied_by([1, 2, 3]) and s.satisfied_by([2, 3, 3])
    point, dirs = parametrize(s)
    assert from_point_directions(point, dirs) == s
    assert from_point_directions([5, 6], []).dimension == 0


coef = st.integers(-3, 3)


@st.composite
def subspaces(draw, n=3):
    while True:
        r = draw(st.integers(0, n))
        rows = [[draw(coef) for _ in range(n)] for _ in range(r)]
        rhs = [draw(coef) for _ in range(r)]
        s = canonicalize(rows, rhs, n)
        if s is not EMPTY:
            return s


@settings(max_examples=150, deadline=None)
@given(subspaces(), subspaces(), subspaces())
def test_intersection_algebra(s, t, u):
    assert canonicalize(s.rows, s.rhs, 3) == s
    assert intersect(s, s) == s
    st_, ts = intersect(s, t), intersect(t, s)
    assert st_ == ts
    if st_ is not EMPTY:
        assert contains(s, st_) and contains(t, st_)
        assert st_.dimension <= min(s.dimension, t.dimension)
        left = intersect(st_, u)
    else:
        left = EMPTY
    tu = intersect(t, u)
    right = EMPTY if tu is EMPTY else intersect(s, tu)
    assert left == right


@settings(max_examples=100, deadline=None)
@given(subspaces(n=4), st.lists(st.fractions(max_denominator=5), min_size=4, max_size=4))
def test_parametric_points_satisfy_equations(s, coeffs):
    point, dirs = parametrize(s)
    p = list(point)
    for c, d in zip(coeffs, dirs):
        p = [a + c * b for a, b in zip(p, d)]
    assert s.satisfied_by(p)
    assert len(dirs) == s.dimension
