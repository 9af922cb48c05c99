import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polynorm.generators import (
    gen_bruns_gubeladze,
    gen_random_3polytope,
    gen_random_smooth_polygon,
    gen_reeve,
)
from polynorm.lattice import GeometryError, convex_hull, dilate
from polynorm.normality import (
    decompose_point,
    is_normal,
    nakagawa_consistency,
    pair_check,
    verify_witness,
)

from conftest import UNIT_CUBE


def test_cube_is_normal():
    assert is_normal(UNIT_CUBE)
    assert is_normal(UNIT_CUBE, paranoid=True)


def test_reeve_witness():
    res = is_normal(gen_reeve(2))
    assert not res.normal
    assert res.witness.k == 2
    assert res.witness.point == (1, 1, 1)


def test_pair_check_levels():
    q2 = gen_reeve(2)
    assert not pair_check(q2, 1).ok
    assert pair_check(q2, 1).witness == (1, 1, 1)
    # levels >= dim - 1 hold for every lattice polytope
    assert pair_check(q2, 2).ok
    assert pair_check(q2, 3).ok


def test_bg_normality_thresholds():
    for q in range(1, 6):
        assert is_normal(gen_bruns_gubeladze(q)).normal == (q <= 3)


def test_decompose_point_success_and_failure():
    assert decompose_point(UNIT_CUBE, (2, 1, 2), 2) is not None
    assert decompose_point(gen_reeve(2), (1, 1, 1), 2) is None
    parts = decompose_point(UNIT_CUBE, (3, 3, 0), 3)
    assert len(parts) == 3
    assert tuple(sum(c) for c in zip(*parts)) == (3, 3, 0)


def test_decompose_point_rejects_outside_dilate():
    with pytest.raises(GeometryError):
        decompose_point(UNIT_CUBE, (5, 0, 0), 2)


def test_verify_witness_roundtrip():
    res = is_normal(gen_reeve(3))
    assert not res.normal
    assert verify_witness(gen_reeve(3), res.witness)


def test_segment_and_polygon_normality():
    assert is_normal(convex_hull([(0, 0, 0), (4, 2, 6)]))
    # every lattice polygon is normal
    tri = convex_hull([(0, 0), (3, 1), (1, 4)])
    assert is_normal(tri, paranoid=True)


@given(st.integers(0, 10**6))
@settings(max_examples=30, deadline=None)
def test_random_polygons_are_normal(seed):
    assert is_normal(gen_random_smooth_polygon(seed, 6))


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_nakagawa_consistency_on_random_3polytopes(seed):
    assert nakagawa_consistency(gen_random_3polytope(seed, 4))


@given(st.integers(0, 10**6))
@settings(max_examples=15, deadline=None)
def test_double_dilates_are_normal(seed):
    # classical bound: (n-1)-fold dilates in dimension n are normal
    p = gen_random_3polytope(seed, 3)
    assert is_normal(dilate(p, 2))
