import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polynorm.classify import (
    hilbert_basis,
    is_basic_triangle,
    is_simple,
    is_smooth,
    is_very_ample,
    normalized_area,
    vertex_cone,
)
from polynorm.generators import gen_bruns_gubeladze, gen_random_3polytope, gen_reeve
from polynorm.lattice import convex_hull, dilate

from conftest import UNIT_CUBE


def test_cube_is_smooth_and_simple():
    assert is_simple(UNIT_CUBE)
    assert is_smooth(UNIT_CUBE)


def test_octahedron_is_not_simple():
    p = convex_hull(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    )
    assert not is_simple(p)
    assert not is_smooth(p)


def test_reeve_simple_but_not_smooth_for_large_q():
    q2 = gen_reeve(2)
    assert is_simple(q2)
    assert not is_smooth(q2)
    assert is_smooth(gen_reeve(1))


def test_very_ample_thresholds():
    for q in range(1, 6):
        assert is_very_ample(gen_reeve(q)) == (q == 1)
        assert is_very_ample(gen_bruns_gubeladze(q))


def test_hilbert_basis_of_smooth_cone_is_the_rays():
    cone = vertex_cone(UNIT_CUBE, (0, 0, 0))
    assert hilbert_basis(cone) == frozenset({(1, 0, 0), (0, 1, 0), (0, 0, 1)})


def test_hilbert_basis_reeve_vertex_cone_has_interior_generator():
    q2 = gen_reeve(2)
    cones = [vertex_cone(q2, v) for v in q2.vertices]
    extra = max(len(hilbert_basis(c)) for c in cones)
    assert extra > 3


def test_normalized_area():
    tri = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert normalized_area(tri) == 1
    assert normalized_area(dilate(tri, 2)) == 4
    assert is_basic_triangle(tri)
    assert not is_basic_triangle(dilate(tri, 2))


def test_smooth_polygon_examples():
    hexagon = convex_hull([(1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)])
    assert is_smooth(hexagon)
    slanted = convex_hull([(0, 0), (2, 1), (1, 2)])
    assert not is_smooth(slanted)


@given(st.integers(0, 10**6))
@settings(max_examples=40, deadline=None)
def test_dilates_of_3polytopes_are_very_ample(seed):
    # classical bound: (n-1)-fold dilates in dimension n are very ample
    p = gen_random_3polytope(seed, 4)
    assert is_very_ample(dilate(p, 2))


@given(st.integers(0, 10**6))
@settings(max_examples=25, deadline=None)
def test_simple_and_smooth_invariant_under_dilation(seed):
    p = gen_random_3polytope(seed, 4)
    q = dilate(p, 2)
    assert is_simple(p) == is_simple(q)
    assert is_smooth(p) == is_smooth(q)
