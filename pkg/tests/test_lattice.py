import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polynorm.lattice import (
    AffineUnimodularMap,
    CoordinateOverflowError,
    GeometryError,
    apply_map,
    convex_hull,
    dilate,
    minkowski_sum,
    segment,
    vertical_column_ints,
)

points_2d = st.lists(
    st.tuples(st.integers(-9, 9), st.integers(-9, 9)), min_size=1, max_size=12
)
points_3d = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6), st.integers(-6, 6)),
    min_size=1,
    max_size=10,
)


def test_hull_removes_duplicates_and_interior():
    p = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
    assert set(p.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert p.dim == 2


def test_hull_tetrahedron():
    p = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    assert len(p.vertices) == 4
    assert p.dim == 3


def test_hull_collinear_points_make_a_segment():
    p = convex_hull([(0, 0, 0), (2, 0, 0), (1, 0, 0)])
    assert set(p.vertices) == {(0, 0, 0), (2, 0, 0)}
    assert p.dim == 1


def test_hull_rejects_oversized_coordinates():
    with pytest.raises(CoordinateOverflowError):
        convex_hull([(0, 0), (10**7, 0), (0, 1)])


def test_lattice_points_unit_cube():
    p = convex_hull([(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    assert len(p.lattice_points()) == 8
    assert len(dilate(p, 2).lattice_points()) == 27


def test_lattice_points_of_lower_dim_polytope():
    p = convex_hull([(0, 0, 0), (3, 0, 0)])
    assert p.lattice_points() == ((0, 0, 0), (1, 0, 0), (2, 0, 0), (3, 0, 0))


def test_minkowski_sum_square_plus_segment():
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    s = minkowski_sum(sq, segment((0, 0), (2, 0)))
    assert set(s.vertices) == {(0, 0), (3, 0), (0, 1), (3, 1)}


def test_dilate_matches_repeated_sum():
    p = convex_hull([(0, 0), (2, 1), (1, 3)])
    assert dilate(p, 3) == minkowski_sum(p, minkowski_sum(p, p))


def test_contains_scaled_half_points():
    p = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert p.contains_scaled((1, 1), 2)
    assert not p.contains_scaled((3, 1), 2)


def test_vertical_column_ints():
    prism = convex_hull([(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 3), (2, 0, 3), (0, 2, 3)])
    assert vertical_column_ints(prism, (1, 1)) == (0, 3)
    assert vertical_column_ints(prism, (3, 3)) is None


def test_apply_map_roundtrip():
    p = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
    t = AffineUnimodularMap(((1, 1, 0), (0, 1, 0), (0, 0, 1)), (5, -2, 7))
    q = apply_map(t, p)
    assert apply_map(t.inverse(), q) == p


def test_degenerate_map_rejected():
    with pytest.raises(GeometryError):
        AffineUnimodularMap(((1, 0), (2, 0)), (0, 0))


@given(points_2d)
@settings(max_examples=60, deadline=None)
def test_hull_is_idempotent_2d(pts):
    p = convex_hull(pts)
    assert convex_hull(p.vertices) == p


@given(points_3d)
@settings(max_examples=60, deadline=None)
def test_hull_contains_all_inputs_3d(pts):
    p = convex_hull(pts)
    assert all(p.contains(x) for x in pts)


@given(points_3d)
@settings(max_examples=40, deadline=None)
def test_vertices_are_lattice_points(pts):
    p = convex_hull(pts)
    lp = p.lattice_point_set()
    assert set(p.vertices) <= lp


@given(points_2d, st.integers(1, 3))
@settings(max_examples=30, deadline=None)
def test_dilate_point_counts_monotone(pts, k):
    p = convex_hull(pts)
    assert len(dilate(p, k).lattice_points()) >= len(p.lattice_points())
