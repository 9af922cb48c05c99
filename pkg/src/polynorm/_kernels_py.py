"""Pure-Python (numpy) implementations of the hot kernels.

These are the fallback lane; `polynorm.kernels` prefers the compiled
extension when it is available.  Both lanes are exact: all arithmetic is
int64 and callers guarantee coordinates small enough that no products
overflow (see `polynorm.lattice.COORD_LIMIT`).
"""

from __future__ import annotations

import numpy as np

IMPLEMENTATION = "python"

# chunk size for the outer sumset in unreachable_targets
_CHUNK = 4_000_000


def enumerate_box(
    normals: np.ndarray, offsets: np.ndarray, lo: np.ndarray, hi: np.ndarray
) -> np.ndarray:
    """All integer points x with lo <= x <= hi and normals @ x >= offsets.

    Returns an (N, dim) int64 array in lexicographic order.
    """
    lo = np.asarray(lo, dtype=np.int64)
    hi = np.asarray(hi, dtype=np.int64)
    dim = lo.shape[0]
    if np.any(hi < lo):
        return np.empty((0, dim), dtype=np.int64)
    axes = [np.arange(lo[i], hi[i] + 1, dtype=np.int64) for i in range(dim)]
    grid = np.meshgrid(*axes, indexing="ij")
    pts = np.stack([g.ravel() for g in grid], axis=1)
    if len(normals):
        mask = (pts @ np.asarray(normals, dtype=np.int64).T >= offsets).all(axis=1)
        pts = pts[mask]
    return pts


def _encode(pts: np.ndarray, base: np.ndarray, strides: np.ndarray) -> np.ndarray:
    return (pts - base) @ strides


def unreachable_targets(
    targets: np.ndarray, left: np.ndarray, right: np.ndarray
) -> np.ndarray:
    """Boolean mask of targets NOT expressible as (left point) + (right point).

    All three arrays are (·, dim) int64.  Rows of `targets` are compared
    against the full sumset left + right.
    """
    targets = np.asarray(targets, dtype=np.int64)
    left = np.asarray(left, dtype=np.int64)
    right = np.asarray(right, dtype=np.int64)
    if len(targets) == 0:
        return np.zeros(0, dtype=bool)
    if len(left) == 0 or len(right) == 0:
        return np.ones(len(targets), dtype=bool)
    dim = targets.shape[1]
    lo = np.minimum(left.min(axis=0), right.min(axis=0))
    hi = np.maximum(left.max(axis=0), right.max(axis=0))
    width = (hi - lo) * 2 + 1
    strides = np.ones(dim, dtype=np.int64)
    for i in range(dim - 2, -1, -1):
        strides[i] = strides[i + 1] * width[i + 1]
    enc_l = _encode(left, lo, strides)
    enc_r = _encode(right, lo, strides)
    # targets outside the sumset bounding box are trivially unreachable and
    # must not be encoded (their keys would collide)
    in_box = ((targets >= 2 * lo) & (targets <= 2 * hi)).all(axis=1)
    enc_t = _encode(targets[in_box], 2 * lo, strides)

    sums = set()
    rows_per_chunk = max(1, _CHUNK // len(enc_r))
    for start in range(0, len(enc_l), rows_per_chunk):
        block = np.add.outer(enc_l[start : start + rows_per_chunk], enc_r)
        sums.update(np.unique(block).tolist())
    reachable_in_box = np.fromiter(
        (t in sums for t in enc_t.tolist()), dtype=bool, count=len(enc_t)
    )
    unreachable = np.ones(len(targets), dtype=bool)
    unreachable[np.flatnonzero(in_box)[reachable_in_box]] = False
    return unreachable
