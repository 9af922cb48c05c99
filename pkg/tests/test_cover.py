import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polynorm.classify import is_basic_triangle, normalized_area
from polynorm.cover import (
    CoverError,
    basic_triangulation,
    interior_lattice_points,
    is_parallelogram,
    parallelogram_cover,
)
from polynorm.generators import gen_random_smooth_polygon
from polynorm.lattice import GeometryError, convex_hull, dilate


def test_unit_square_covers_itself():
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])
    cov = parallelogram_cover(sq)
    assert cov.pieces == (sq,)
    cov.verify()


def test_double_basic_triangle_three_pieces():
    tri = convex_hull([(0, 0), (2, 0), (0, 2)])
    cov = parallelogram_cover(tri)
    assert all(is_parallelogram(piece) for piece in cov.pieces)
    cov.verify()


def test_rectangle_is_one_piece():
    r = convex_hull([(0, 0), (3, 0), (0, 1), (3, 1)])
    cov = parallelogram_cover(r)
    assert cov.pieces == (r,)
    cov.verify()


def test_basic_triangle_is_rejected():
    tri = convex_hull([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(GeometryError):
        parallelogram_cover(tri)


def test_non_smooth_polygon_is_rejected():
    slanted = convex_hull([(0, 0), (2, 1), (1, 2)])
    with pytest.raises(GeometryError):
        parallelogram_cover(slanted)


def test_cover_of_embedded_polygon():
    sq = convex_hull([(0, 0, 1), (2, 0, 1), (0, 2, 1), (2, 2, 1)])
    cov = parallelogram_cover(sq)
    cov.verify()
    assert all(piece.ambient == 3 for piece in cov.pieces)


def test_is_parallelogram():
    assert is_parallelogram(convex_hull([(0, 0), (2, 1), (1, 3), (3, 4)]))
    assert not is_parallelogram(convex_hull([(0, 0), (2, 0), (0, 2)]))


def test_interior_lattice_points():
    tri3 = dilate(convex_hull([(0, 0), (1, 0), (0, 1)]), 3)
    assert interior_lattice_points(tri3) == ((1, 1),)


def test_basic_triangulation_counts_match_area():
    for pts in (
        [(0, 0), (1, 0), (0, 1), (1, 1)],
        [(0, 0), (3, 0), (0, 3)],
        [(1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)],
    ):
        b = convex_hull(pts)
        tris = basic_triangulation(b)
        assert len(tris) == normalized_area(b)
        assert all(is_basic_triangle(t) for t in tris)


@given(st.integers(0, 10**6), st.integers(2, 8))
@settings(max_examples=40, deadline=None)
def test_random_smooth_polygon_covers_verify(seed, bound):
    a = gen_random_smooth_polygon(seed, bound)
    if normalized_area(a) == 1:
        return
    cov = parallelogram_cover(a)
    cov.verify()
    assert all(is_parallelogram(piece) for piece in cov.pieces)


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_dilated_triangles_cover(seed):
    import random

    r = random.Random(seed)
    tri = convex_hull([(0, 0), (1, 0), (0, 1)])
    cov = parallelogram_cover(dilate(tri, r.randrange(2, 7)))
    cov.verify()
