# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels (lattice point box scans
and pair-sum reachability).  Mirrors polynorm._kernels_py exactly."""

import numpy as np
cimport numpy as cnp

cnp.import_array()

IMPLEMENTATION = "cython"


def enumerate_box(normals, offsets, lo, hi):
    cdef cnp.int64_t[:, ::1] A = np.ascontiguousarray(normals, dtype=np.int64)
    cdef cnp.int64_t[::1] b = np.ascontiguousarray(offsets, dtype=np.int64)
    cdef cnp.int64_t[::1] lo_v = np.ascontiguousarray(lo, dtype=np.int64)
    cdef cnp.int64_t[::1] hi_v = np.ascontiguousarray(hi, dtype=np.int64)
    cdef Py_ssize_t dim = lo_v.shape[0]
    cdef Py_ssize_t nf = A.shape[0]
    cdef Py_ssize_t i, j, k, count
    cdef cnp.int64_t x0, x1, x2, s
    cdef bint ok

    cdef cnp.int64_t total = 1
    for i in range(dim):
        if hi_v[i] < lo_v[i]:
            return np.empty((0, dim), dtype=np.int64)
        total *= hi_v[i] - lo_v[i] + 1
    out = np.empty((total, dim), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] out_v = out
    count = 0

    if dim == 1:
        for x0 in range(lo_v[0], hi_v[0] + 1):
            ok = True
            for k in range(nf):
                if A[k, 0] * x0 < b[k]:
                    ok = False
                    break
            if ok:
                out_v[count, 0] = x0
                count += 1
    elif dim == 2:
        for x0 in range(lo_v[0], hi_v[0] + 1):
            for x1 in range(lo_v[1], hi_v[1] + 1):
                ok = True
                for k in range(nf):
                    if A[k, 0] * x0 + A[k, 1] * x1 < b[k]:
                        ok = False
                        break
                if ok:
                    out_v[count, 0] = x0
                    out_v[count, 1] = x1
                    count += 1
    elif dim == 3:
        for x0 in range(lo_v[0], hi_v[0] + 1):
            for x1 in range(lo_v[1], hi_v[1] + 1):
                for x2 in range(lo_v[2], hi_v[2] + 1):
                    ok = True
                    for k in range(nf):
                        if A[k, 0] * x0 + A[k, 1] * x1 + A[k, 2] * x2 < b[k]:
                            ok = False
                            break
                    if ok:
                        out_v[count, 0] = x0
                        out_v[count, 1] = x1
                        out_v[count, 2] = x2
                        count += 1
    else:
        raise ValueError("dimension must be 1..3")
    return out[:count]


def unreachable_targets(targets, left, right):
    cdef cnp.int64_t[:, ::1] T = np.ascontiguousarray(targets, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] L = np.ascontiguousarray(left, dtype=np.int64)
    cdef cnp.int64_t[:, ::1] R = np.ascontiguousarray(right, dtype=np.int64)
    cdef Py_ssize_t nt = T.shape[0], nl = L.shape[0], nr = R.shape[0]
    if nt == 0:
        return np.zeros(0, dtype=bool)
    out = np.ones(nt, dtype=bool)
    if nl == 0 or nr == 0:
        return out
    cdef Py_ssize_t dim = T.shape[1]
    cdef Py_ssize_t i, j, k
    cdef cnp.int64_t lo0, lo1, lo2, w1, w2, s1, s2, key
    cdef cnp.npy_bool[::1] out_v = out

    # shared encoding base / strides, wide enough for pairwise sums
    lo_arr = np.minimum(
        np.asarray(L).min(axis=0), np.asarray(R).min(axis=0)
    ).astype(np.int64)
    hi_arr = np.maximum(
        np.asarray(L).max(axis=0), np.asarray(R).max(axis=0)
    ).astype(np.int64)
    width = (hi_arr - lo_arr) * 2 + 1
    lo0 = lo_arr[0]
    lo1 = lo_arr[1] if dim > 1 else 0
    lo2 = lo_arr[2] if dim > 2 else 0
    w1 = width[1] if dim > 1 else 1
    w2 = width[2] if dim > 2 else 1
    s2 = 1
    s1 = w2
    cdef cnp.int64_t s0 = w1 * w2

    cdef set lset = set()
    for i in range(nl):
        key = (L[i, 0] - lo0) * s0
        if dim > 1:
            key += (L[i, 1] - lo1) * s1
        if dim > 2:
            key += L[i, 2] - lo2
        lset.add(key)

    cdef cnp.int64_t hi0 = hi_arr[0] - lo0
    cdef cnp.int64_t hi1 = (hi_arr[1] - lo1) if dim > 1 else 0
    cdef cnp.int64_t hi2 = (hi_arr[2] - lo2) if dim > 2 else 0
    cdef cnp.int64_t tx0, tx1, tx2, c0, c1, c2
    for i in range(nt):
        tx0 = T[i, 0]
        tx1 = T[i, 1] if dim > 1 else 0
        tx2 = T[i, 2] if dim > 2 else 0
        for j in range(nr):
            # candidate left partner: target - right point; must land in the
            # encoded box or the key is meaningless
            c0 = tx0 - R[j, 0] - lo0
            if c0 < 0 or c0 > hi0:
                continue
            key = c0 * s0
            if dim > 1:
                c1 = tx1 - R[j, 1] - lo1
                if c1 < 0 or c1 > hi1:
                    continue
                key += c1 * s1
            if dim > 2:
                c2 = tx2 - R[j, 2] - lo2
                if c2 < 0 or c2 > hi2:
                    continue
                key += c2
            if key in lset:
                out_v[i] = False
                break
    return out
