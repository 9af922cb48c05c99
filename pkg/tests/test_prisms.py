import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polynorm.generators import gen_random_smooth_polygon
from polynorm.lattice import (
    GeometryError,
    apply_map,
    AffineUnimodularMap,
    convex_hull,
    dilate,
    minkowski_sum,
    segment,
)
from polynorm.normality import is_normal
from polynorm.prisms import (
    CertificateError,
    build_QA,
    certify_prism,
    certify_QA,
)

from conftest import UNIT_CUBE

E3 = segment((0, 0, 0), (0, 0, 1))


def _embed(polygon, z=0):
    return convex_hull([(x, y, z) for x, y in polygon])


def test_unit_cube_certificate_is_one_parallelepiped():
    sq = _embed([(0, 0), (1, 0), (0, 1), (1, 1)])
    cert = certify_prism(sq, E3)
    assert cert.target == UNIT_CUBE
    assert len(cert.pieces) == 1
    assert cert.pieces[0].witness_kind == "parallelepiped"
    cert.verify()


def test_basic_triangle_with_complemented_segment():
    tri = _embed([(0, 0), (1, 0), (0, 1)])
    cert = certify_prism(tri, segment((0, 0, 0), (1, 1, 1)))
    assert len(cert.pieces) == 1
    assert cert.pieces[0].witness_kind == "prism_A_plus_I"
    cert.verify()


def test_basic_triangle_without_lattice_complement_is_rejected():
    tri = _embed([(0, 0), (1, 0), (0, 1)])
    with pytest.raises((GeometryError, CertificateError)):
        certify_prism(tri, segment((0, 0, 0), (1, 1, 2)))


def test_flat_segment_direction_is_rejected():
    sq = _embed([(0, 0), (2, 0), (0, 2), (2, 2)])
    with pytest.raises(GeometryError):
        certify_prism(sq, segment((0, 0, 0), (1, 1, 0)))


def test_prism_certificate_decomposes_every_double_point():
    hexagon = _embed([(1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2)])
    cert = certify_prism(hexagon, segment((0, 0, 0), (1, 0, 3)))
    cert.verify()
    p = cert.target
    for m in dilate(p, 2).lattice_points():
        d = cert.decompose(m)
        assert p.contains(d.left) and p.contains(d.right)
        assert tuple(a + b for a, b in zip(d.left, d.right)) == m


def test_build_QA_shape():
    roof = _embed([(0, 0), (1, 0), (0, 1), (1, 1)], z=2)
    qa = build_QA(roof, E3, 0)
    assert (0, 0, 0) in qa.vertices
    assert (1, 1, 3) in qa.vertices


def test_certify_QA_tilted_square():
    roof = convex_hull([(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 2)])
    shifted = roof.translate((0, 0, 2))
    cert = certify_QA(shifted, E3, 0)
    cert.verify()
    assert is_normal(cert.target)


def test_certify_QA_matches_oracle_on_area_four_roof():
    roof = convex_hull([(0, 0, 2), (2, 0, 2), (0, 2, 4)])
    cert = certify_QA(roof, E3, 0)
    cert.verify()
    for m in dilate(cert.target, 2).lattice_points():
        d = cert.decompose(m)
        assert tuple(a + b for a, b in zip(d.left, d.right)) == m


def test_verify_rejects_foreign_piece():
    sq = _embed([(0, 0), (1, 0), (0, 1), (1, 1)])
    cert = certify_prism(sq, E3)
    bad = cert.pieces[0].polytope.translate((5, 0, 0))
    forged = type(cert)(cert.target, (type(cert.pieces[0])(bad, "parallelepiped"),))
    with pytest.raises(CertificateError):
        forged.verify()


@given(st.integers(0, 10**6))
@settings(max_examples=20, deadline=None)
def test_random_polygon_prisms_certify(seed):
    a = gen_random_smooth_polygon(seed, 5)
    embedded = convex_hull([(x, y, 0) for x, y in a.vertices])
    cert = certify_prism(embedded, E3)
    cert.verify()
    assert cert.target == minkowski_sum(embedded, E3)


@given(st.integers(0, 10**6))
@settings(max_examples=10, deadline=None)
def test_certificates_survive_unimodular_maps(seed):
    a = gen_random_smooth_polygon(seed, 4)
    embedded = convex_hull([(x, y, 0) for x, y in a.vertices])
    t = AffineUnimodularMap(((1, 0, 1), (0, 1, -1), (0, 0, 1)), (2, -3, 1))
    cert = certify_prism(apply_map(t, embedded), segment(t((0, 0, 0)), t((0, 0, 1))))
    cert.verify()
