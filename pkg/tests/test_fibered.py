import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polynorm.fibered import (
    certify_fibered,
    detect_fibered,
    fibered_pair_decompose,
)
from polynorm.generators import gen_bruns_gubeladze, gen_random_fibered, gen_reeve
from polynorm.lattice import (
    AffineUnimodularMap,
    GeometryError,
    apply_map,
    convex_hull,
    dilate,
)
from polynorm.normality import is_normal

from conftest import UNIT_CUBE


def _exhaust_pairs(f):
    p = f.polytope
    for m in dilate(p, 2).lattice_points():
        d = fibered_pair_decompose(f, m)
        assert p.contains(d.left) and p.contains(d.right)
        assert tuple(a + b for a, b in zip(d.left, d.right)) == m


def test_cube_detects_along_z():
    f = detect_fibered(UNIT_CUBE)
    assert f is not None
    assert f.axis == (0, 0, 1)
    assert f.irreducible
    assert set(f.base.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}


def test_bg_prisms_are_fibered_but_reducible():
    f = detect_fibered(gen_bruns_gubeladze(4))
    assert f is not None
    assert set(f.base.vertices) == {(0, 0), (1, 0), (0, 1), (1, 1)}
    assert not f.irreducible


def test_reeve_tetrahedra_are_not_fibered():
    assert detect_fibered(gen_reeve(2)) is None


def test_slanted_prism_detected_after_shear():
    shear = AffineUnimodularMap(((1, 0, 2), (0, 1, 1), (0, 0, 1)), (0, 0, 0))
    p = apply_map(shear, UNIT_CUBE)
    f = detect_fibered(p)
    assert f is not None
    assert f.irreducible


def test_certify_requires_flat_bottom():
    f = detect_fibered(gen_bruns_gubeladze(1))
    assert f is not None and not f.irreducible
    with pytest.raises(GeometryError):
        certify_fibered(f)


def test_certify_requires_smooth():
    p = convex_hull(
        [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 1), (2, 0, 1), (0, 2, 2)]
    )
    f = detect_fibered(p)
    if f is not None and f.irreducible:
        with pytest.raises(GeometryError):
            certify_fibered(f)


def test_cube_certificate_and_pairs():
    f = detect_fibered(UNIT_CUBE)
    cert = certify_fibered(f)
    cert.verify()
    assert len(cert.pieces) == 1
    _exhaust_pairs(f)


def test_hexagonal_prism_certificate():
    hexagon = [(1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)]
    p = convex_hull([(x, y, z) for x, y in hexagon for z in (0, 2)])
    f = detect_fibered(p)
    cert = certify_fibered(f)
    cert.verify()
    _exhaust_pairs(f)


def test_tilted_roof_certificate():
    p = convex_hull(
        [(0, 0, 0), (2, 0, 0), (0, 2, 0), (2, 2, 0),
         (0, 0, 2), (2, 0, 4), (0, 2, 2), (2, 2, 4)]
    )
    f = detect_fibered(p)
    cert = certify_fibered(f)
    cert.verify()
    _exhaust_pairs(f)


def test_decompose_rejects_outside_points():
    f = detect_fibered(UNIT_CUBE)
    with pytest.raises(GeometryError):
        fibered_pair_decompose(f, (5, 5, 5))


@given(st.integers(0, 10**6))
@settings(max_examples=15, deadline=None)
def test_random_fibered_instances_are_normal_with_certificates(seed):
    f = gen_random_fibered(seed, 5)
    assert is_normal(f.polytope)
    cert = certify_fibered(f)
    cert.verify()


@given(st.integers(0, 10**6))
@settings(max_examples=6, deadline=None)
def test_random_fibered_pair_decompositions(seed):
    f = gen_random_fibered(seed, 4)
    _exhaust_pairs(f)
