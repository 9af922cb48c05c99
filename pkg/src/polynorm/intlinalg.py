"""Exact integer linear algebra helpers for lattice dimensions 1..3.

Everything here works on plain Python ints (arbitrary precision), so the
routines are exact by construction.  They back the geometry layer, which
enforces its own coordinate-size policy.
"""

from __future__ import annotations

from math import gcd
from typing import Sequence

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with a*x + b*y = g = gcd(a, b), g >= 0."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def vgcd(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vec:
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = vgcd(v)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def vsub(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vadd(u: Sequence[int], v: Sequence[int]) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vscale(k: int, v: Sequence[int]) -> Vec:
    return tuple(k * a for a in v)


def vneg(v: Sequence[int]) -> Vec:
    return tuple(-a for a in v)


def cross(u: Sequence[int], v: Sequence[int]) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def cross2(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


def det(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    raise ValueError("only sizes 1..3 supported")


def mat_mul(a: Mat, b: Mat) -> Mat:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def mat_vec(a: Mat, v: Sequence[int]) -> Vec:
    return tuple(dot(row, v) for row in a)


def transpose(a: Mat) -> Mat:
    n = len(a)
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))


def adjugate(m: Mat) -> Mat:
    n = len(m)
    if n == 1:
        return ((1,),)
    if n == 2:
        return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))
    if n == 3:
        c = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                r = [k for k in range(3) if k != i]
                s = [k for k in range(3) if k != j]
                minor = m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
                c[j][i] = minor if (i + j) % 2 == 0 else -minor
        return tuple(tuple(row) for row in c)
    raise ValueError("only sizes 1..3 supported")


def unimodular_inverse(m: Mat) -> Mat:
    """Exact inverse of an integer matrix with determinant +-1."""
    d = det(m)
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det={d})")
    adj = adjugate(m)
    if d == 1:
        return adj
    return tuple(tuple(-x for x in row) for row in adj)


def complete_to_unimodular(row: Sequence[int]) -> Mat:
    """Return an integer matrix with |det| = 1 whose last row is `row`.

    `row` must be a primitive vector.  Uses Euclidean column reduction on
    the row while tracking the inverse operations.
    """
    n = len(row)
    if vgcd(row) != 1:
        raise ValueError("row must be primitive")
    v = list(row)
    # w tracks the matrix with v = v_reduced @ w throughout.
    w = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    # Reduce v to +-e_0 by column operations (v[i] -= q*v[j] pairs with the
    # row operation w[j] += q*w[i]).
    while True:
        nz = [i for i in range(n) if v[i] != 0]
        if len(nz) == 1:
            break
        # pick the two entries of smallest absolute value
        nz.sort(key=lambda i: abs(v[i]))
        j, i = nz[0], nz[1]
        q = v[i] // v[j]
        v[i] -= q * v[j]
        for k in range(n):
            w[j][k] += q * w[i][k]
    pos = next(i for i in range(n) if v[i] != 0)
    if pos != 0:
        # swap reduced coordinate into slot 0; mirror as a row swap on w
        v[0], v[pos] = v[pos], v[0]
        w[0], w[pos] = w[pos], w[0]
    if v[0] == -1:
        w[0] = [-x for x in w[0]]
    # now row == first row of w; rotate it to the bottom
    rows = w[1:] + [w[0]]
    u = tuple(tuple(r) for r in rows)
    if det(u) not in (1, -1):  # pragma: no cover - internal consistency
        raise AssertionError("basis completion failed")
    return u


def solve_unimodular(m: Mat, rhs: Sequence[int]) -> Vec:
    """Solve m @ x = rhs for unimodular m, exactly over the integers."""
    return mat_vec(unimodular_inverse(m), rhs)
