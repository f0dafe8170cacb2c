import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from barynet.geometry import (
    Interval,
    Simplex,
    SingularSimplex,
    barycentric_coords,
    interval_coords,
)
from oracles import solve_coords

TRIANGLE = [[0, 0], [1, 0], [0, 1]]


def test_vertex_has_unit_coordinates():
    c = barycentric_coords(Simplex(TRIANGLE), [0, 0])
    np.testing.assert_allclose(c.t, [1, 0, 0], atol=1e-15)
    assert c.inside


@pytest.mark.parametrize(
    "p, expected, inside",
    [
        ([0.25, 0.25], [0.5, 0.25, 0.25], True),
        ([1.0, 1.0], [-1.0, 1.0, 1.0], False),
    ],
)
def test_triangle_coordinates_match_linear_solve(p, expected, inside):
    np.testing.assert_allclose(solve_coords(TRIANGLE, p), expected, atol=1e-15)
    c = barycentric_coords(Simplex(TRIANGLE), p)
    np.testing.assert_allclose(c.t, expected, atol=1e-12)
    assert c.inside is inside
    assert abs(c.t.sum() - 1) < 1e-12


@pytest.mark.parametrize(
    "x, expected, inside",
    [(0.0, [1.0, 0.0], True), (1.0, [0.5, 0.5], True), (3.0, [-0.5, 1.5], False), (2.0, [0.0, 1.0], True)],
)
def test_interval_coordinates(x, expected, inside):
    c = interval_coords(Interval(0.0, 2.0), x)
    np.testing.assert_allclose(c.t, expected, atol=0)
    assert c.inside is inside


def test_interval_requires_order():
    with pytest.raises(ValueError):
        Interval(1.0, 1.0)


@pytest.mark.parametrize(
    "verts",
    [
        [[0, 0], [1, 1], [2, 2]],
        [[0, 0], [0, 0], [1, 0]],
        [[0.0], [0.0]],
        [[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 0]],
    ],
)
def test_degenerate_simplices_rejected(verts):
    with pytest.raises(SingularSimplex):
        Simplex(verts)


def test_wrong_shape_rejected():
    with pytest.raises(ValueError):
        Simplex([[0, 0], [1, 0]])
    with pytest.raises(ValueError):
        barycentric_coords(Simplex(TRIANGLE), [0.0, 0.0, 0.0])


@settings(max_examples=200, deadline=None)
@given(
    d=st.integers(1, 4),
    seed=st.integers(0, 2**32 - 1),
)
def test_convex_round_trip(d, seed):
    rng = np.random.default_rng(seed)
    verts = rng.normal(size=(d + 1, d))
    try:
        s = Simplex(verts)
    except SingularSimplex:
        return
    if np.linalg.cond(np.vstack([verts.T, np.ones(d + 1)])) > 1e6:
        return
    w = rng.dirichlet(np.ones(d + 1))
    c = barycentric_coords(s, w @ verts)
    np.testing.assert_allclose(c.t, w, atol=1e-9)
    assert c.inside


@settings(max_examples=200, deadline=None)
@given(
    a=st.floats(-100, 100),
    width=st.floats(1e-3, 100),
    x=st.floats(-300, 300),
)
def test_interval_agrees_with_general_solve(a, width, x):
    b = a + width
    if not a < b:
        return
    c1 = interval_coords(Interval(a, b), x)
    c2 = barycentric_coords(Simplex([[a], [b]]), [x])
    scale = max(1.0, abs(x - a) / width)
    np.testing.assert_allclose(c1.t, c2.t, atol=1e-12 * scale)
    assert c1.inside == bool(np.all(c1.t >= -1e-12))
    slack = 1e-12 * width
    if x < a - slack or x > b + slack or a <= x <= b:
        assert c1.inside == (a <= x <= b)


def test_inside_flag_boundary_tolerance():
    s = Simplex(TRIANGLE)
    c = barycentric_coords(s, [0.5, 0.5])
    assert c.inside
    assert not barycentric_coords(s, [0.5, -1e-6]).inside
