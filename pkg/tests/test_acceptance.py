"""Acceptance gate: one test per criterion, each printing a pass/fail line
with its wall time even when output capture is on."""

import random
import time
from contextlib import contextmanager

import pytest

from polynorm.classify import is_simple, is_smooth, is_very_ample, normalized_area
from polynorm.cover import is_parallelogram, parallelogram_cover
from polynorm.fibered import certify_fibered, detect_fibered, fibered_pair_decompose
from polynorm.generators import (
    gen_bruns_gubeladze,
    gen_random_3polytope,
    gen_random_fibered,
    gen_random_smooth_polygon,
    gen_reeve,
)
from polynorm.lattice import AffineUnimodularMap, GeometryError, apply_map, dilate
from polynorm.normality import decompose_point, is_normal, pair_check
from polynorm.prisms import CertificateError

from conftest import corpus_3d


@contextmanager
def criterion(capsys, number, title):
    started = time.perf_counter()
    failed = False
    try:
        yield
    except BaseException:
        failed = True
        raise
    finally:
        elapsed = time.perf_counter() - started
        with capsys.disabled():
            print(
                f"\ncriterion {number} ({title}): "
                f"{'FAIL' if failed else 'PASS'} in {elapsed:.1f}s"
            )


def test_criterion_1_threshold_families(capsys):
    with criterion(capsys, 1, "very-ampleness and normality thresholds"):
        for q in range(1, 6):
            assert is_very_ample(gen_reeve(q)) == (q == 1)
            pq = gen_bruns_gubeladze(q)
            assert is_very_ample(pq)
            assert is_normal(pq).normal == (q <= 3)


def test_criterion_2_non_normality_witness(capsys):
    with criterion(capsys, 2, "tetrahedron witness"):
        q2 = gen_reeve(2)
        res = pair_check(q2, 1)
        assert not res.ok and res.witness == (1, 1, 1)
        assert decompose_point(q2, (1, 1, 1), 2) is None
        pts = q2.lattice_points()
        assert len(pts) == 4
        assert all(
            tuple(x + y for x, y in zip(a, b)) != (1, 1, 1)
            for a in pts
            for b in pts
        )


def test_criterion_3_fibered_prisms_are_normal_with_certificates(capsys):
    with criterion(capsys, 3, "200 random fibered prisms"):
        for seed in range(200):
            f = gen_random_fibered(seed, 3 + seed % 6)
            p = f.polytope
            assert is_normal(p).normal
            cert = certify_fibered(f)
            cert.verify()
            for m in dilate(p, 2).lattice_points():
                d = fibered_pair_decompose(f, m)
                assert p.contains(d.left) and p.contains(d.right)
                assert tuple(a + b for a, b in zip(d.left, d.right)) == m


def test_criterion_4_polygon_covers(capsys):
    with criterion(capsys, 4, "200 random polygon covers"):
        done = 0
        seed = 0
        while done < 200:
            a = gen_random_smooth_polygon(seed, 3 + seed % 6)
            seed += 1
            if normalized_area(a) == 1:
                continue
            cov = parallelogram_cover(a)
            cov.verify()
            assert all(is_parallelogram(piece) for piece in cov.pieces)
            assert all(
                all(a.contains(v) for v in piece.vertices) for piece in cov.pieces
            )
            done += 1


def test_criterion_5_pair_checks_hold_at_high_levels(capsys):
    with criterion(capsys, 5, "levels 2..4 pair checks on the corpus"):
        for _, p in corpus_3d():
            for k in (2, 3, 4):
                assert pair_check(p, k).ok


def _random_map(rng):
    shears = []
    for _ in range(3):
        i, j = rng.sample(range(3), 2)
        m = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
        m[i][j] = rng.randint(-2, 2)
        shears.append(AffineUnimodularMap(tuple(map(tuple, m)), (0, 0, 0)))
    t = AffineUnimodularMap.translation_by(tuple(rng.randint(-4, 4) for _ in range(3)))
    out = t
    for s in shears:
        out = out.compose(s)
    return out


def test_criterion_6_unimodular_invariance(capsys):
    with criterion(capsys, 6, "100 unimodular invariance checks"):
        rng = random.Random(99)
        for trial in range(100):
            p = gen_random_3polytope(trial, 4)
            q = apply_map(_random_map(rng), p)
            assert is_simple(p) == is_simple(q)
            assert is_smooth(p) == is_smooth(q)
            assert is_very_ample(p) == is_very_ample(q)
            assert is_normal(p).normal == is_normal(q).normal


def test_criterion_7_certificates_imply_oracle(capsys):
    with criterion(capsys, 7, "certificate and oracle agreement"):
        for label, p in corpus_3d():
            f = detect_fibered(p) if p.dim == 3 else None
            try:
                cert = None if f is None else certify_fibered(f)
            except (GeometryError, CertificateError):
                cert = None
            if cert is not None:
                cert.verify()
                assert is_normal(p).normal, label


def test_criterion_8_cubic_point_counts(capsys):
    with criterion(capsys, 8, "cubic growth of dilate point counts"):
        for seed in range(50):
            p = gen_random_3polytope(seed, 4)
            counts = [len(dilate(p, k).lattice_points()) for k in range(1, 6)]
            # a degree-3 polynomial has vanishing 4th finite difference
            for _ in range(4):
                counts = [b - a for a, b in zip(counts, counts[1:])]
            assert counts == [0]
