import pytest

from polynorm.classify import is_smooth, smooth_in_own_lattice
from polynorm.generators import (
    gen_bruns_gubeladze,
    gen_random_3polytope,
    gen_random_fibered,
    gen_random_smooth_polygon,
    gen_reeve,
)
from polynorm.lattice import GeometryError, minkowski_sum, segment


def test_reeve_vertices():
    q3 = gen_reeve(3)
    assert set(q3.vertices) == {(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 3)}
    assert len(q3.lattice_points()) == 4


def test_reeve_rejects_nonpositive_q():
    with pytest.raises(GeometryError):
        gen_reeve(0)
    with pytest.raises(GeometryError):
        gen_bruns_gubeladze(-1)


def test_bg_is_reeve_plus_interval():
    q2 = gen_reeve(2)
    expected = minkowski_sum(q2, segment((0, 0, 0), (0, 0, 1)))
    p2 = gen_bruns_gubeladze(2)
    assert p2 == expected
    assert len(p2.vertices) == 8


def test_random_polygon_is_smooth_and_deterministic():
    a = gen_random_smooth_polygon(7, 8)
    b = gen_random_smooth_polygon(7, 8)
    assert a == b
    assert is_smooth(a)
    assert a != gen_random_smooth_polygon(8, 8)


def test_random_polygon_coordinates_bounded():
    for seed in range(10):
        a = gen_random_smooth_polygon(seed, 5)
        lo, hi = a.bounding_box()
        assert all(abs(c) <= 5 * 4 for c in lo + hi)


def test_random_fibered_is_smooth_and_irreducible():
    for seed in range(8):
        f = gen_random_fibered(seed, 5)
        assert f.irreducible
        assert is_smooth(f.polytope)
        assert smooth_in_own_lattice(f.base)
        assert f.polytope.dim == 3


def test_random_fibered_deterministic():
    assert gen_random_fibered(3, 6).polytope == gen_random_fibered(3, 6).polytope


def test_random_3polytope_full_dimensional():
    for seed in range(10):
        p = gen_random_3polytope(seed, 5)
        assert p.dim == 3
    assert gen_random_3polytope(2, 5) == gen_random_3polytope(2, 5)
