"""Exact normality decisions: pair checks, witnesses, point decompositions.

The pair check at level k asks whether (kP + P) and (k+1)P contain the same
lattice points; in dimension 3 normality reduces to the level-1 check (the
higher levels hold automatically for k >= dim - 1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import intlinalg as la
from . import kernels
from .intlinalg import Vec
from .lattice import GeometryError, LatticePolytope, dilate


@dataclass(frozen=True)
class PairDecomposition:
    """target = left + right with left in kP and right in P."""

    target: Vec
    left: Vec
    right: Vec


@dataclass(frozen=True)
class NonNormalityWitness:
    """A point of kP admitting no expression as a sum of k points of P."""

    k: int
    point: Vec


@dataclass(frozen=True)
class PairCheckResult:
    ok: bool
    k: int
    witness: Vec | None = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class NormalityResult:
    normal: bool
    witness: NonNormalityWitness | None = None

    def __bool__(self) -> bool:
        return self.normal


def pair_check(p: LatticePolytope, k: int) -> PairCheckResult:
    """Does every lattice point of (k+1)P split as (point of kP) + (point of P)?

    On failure the witness is the lexicographically smallest failing point.
    """
    if k < 1:
        raise GeometryError("pair check level must be >= 1")
    targets = np.array(dilate(p, k + 1).lattice_points(), dtype=np.int64)
    left = np.array(dilate(p, k).lattice_points(), dtype=np.int64)
    right = np.array(p.lattice_points(), dtype=np.int64)
    missing = kernels.unreachable_targets(targets, left, right)
    if not missing.any():
        return PairCheckResult(True, k)
    witness = tuple(targets[int(np.flatnonzero(missing)[0])].tolist())
    return PairCheckResult(False, k, witness)


def decompose_point(
    p: LatticePolytope, m: Vec, k: int
) -> tuple[Vec, ...] | None:
    """Write m as a sum of k lattice points of P, or None if impossible.

    Depth-first search over P's lattice points in lex order, pruning partial
    sums whose residual falls outside the matching dilate.  A None result is
    an exhaustive-search proof that no decomposition exists.
    """
    if k < 1:
        raise GeometryError("k must be >= 1")
    if not p.contains_scaled(m, k):
        raise GeometryError(f"{m} is not a lattice point of {k}P")
    if k == 1:
        return (m,)
    pts = p.lattice_points()

    def search(residual: Vec, start: int, remaining: int) -> tuple[Vec, ...] | None:
        if remaining == 1:
            return (residual,) if p.contains(residual) and residual >= pts[start] else None
        for i in range(start, len(pts)):
            u = pts[i]
            rest = la.vsub(residual, u)
            if not p.contains_scaled(rest, remaining - 1):
                continue
            tail = search(rest, i, remaining - 1)
            if tail is not None:
                return (u,) + tail
        return None

    return search(m, 0, k)


def is_normal(p: LatticePolytope, paranoid: bool = False) -> NormalityResult:
    """Decide normality of a lattice polytope of dimension <= 3.

    Only the level-1 pair check is needed (levels >= dim-1 always hold);
    `paranoid` additionally runs levels 2 and 3 as a self-check.
    """
    if p.dim > 3:
        raise GeometryError("normality decision implemented for dim <= 3")
    levels = list(range(1, max(1, p.dim - 2) + 1))
    if paranoid:
        levels = sorted(set(levels) | {2, 3})
    for k in levels:
        res = pair_check(p, k)
        if not res.ok:
            return NormalityResult(False, NonNormalityWitness(k + 1, res.witness))
    return NormalityResult(True)


def nakagawa_consistency(p: LatticePolytope) -> bool:
    """Spot-check that pair checks hold at levels dim-1 and dim, as the
    general reduction theorem guarantees.  An implementation self-test."""
    n = p.dim
    return all(pair_check(p, k).ok for k in {max(1, n - 1), max(1, n)})


def verify_witness(p: LatticePolytope, w: NonNormalityWitness) -> bool:
    """Re-verify a non-normality witness by exhaustive search."""
    return p.contains_scaled(w.point, w.k) and decompose_point(p, w.point, w.k) is None
