"""Example generators: the classical tetrahedron families and seeded random
corpora of smooth polygons, fibered prisms, and general 3-polytopes."""

from __future__ import annotations

import random
from fractions import Fraction

from . import intlinalg as la
from .classify import is_smooth
from .fibered import FiberedPrism, detect_fibered
from .intlinalg import Vec
from .lattice import (
    GeometryError,
    LatticePolytope,
    convex_hull,
    minkowski_sum,
    segment,
)

RETRY_BUDGET = 1000


def gen_reeve(q: int) -> LatticePolytope:
    """The tetrahedron Conv{0, e1, e2, (1, 1, q)}: smooth only at q = 1, not
    very ample for q >= 2."""
    if q < 1:
        raise GeometryError("parameter must be a positive integer")
    return convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, q)])


def gen_bruns_gubeladze(q: int) -> LatticePolytope:
    """The prism over the q-th tetrahedron: very ample for every q, yet not
    normal once q >= 4."""
    return minkowski_sum(gen_reeve(q), segment((0, 0, 0), (0, 0, 1)))


_START_FANS = (
    ((1, 0), (0, 1), (-1, -1)),
    ((1, 0), (0, 1), (-1, 0), (0, -1)),
)


def _random_smooth_fan(rng: random.Random) -> list[Vec]:
    rays = list(rng.choice(_START_FANS))
    for _ in range(rng.randrange(7)):
        i = rng.randrange(len(rays))
        u, v = rays[i], rays[(i + 1) % len(rays)]
        rays.insert(i + 1, la.vadd(u, v))
    return rays


def gen_random_smooth_polygon(seed: int, size_bound: int) -> LatticePolytope:
    """A random smooth polygon, deterministic per seed: vertices are solved
    from random support values on a randomly subdivided smooth fan, and the
    result is rejected unless every ray stays a facet."""
    if size_bound < 1:
        raise GeometryError("size bound must be >= 1")
    rng = random.Random(seed)
    for _ in range(RETRY_BUDGET):
        rays = _random_smooth_fan(rng)
        r = len(rays)
        support = [rng.randrange(size_bound + 1) for _ in rays]
        verts = []
        for i in range(r):
            n1, n2 = rays[i], rays[(i + 1) % r]
            o1, o2 = -support[i], -support[(i + 1) % r]
            # the adjacent normals form a lattice basis, so the vertex is
            # integral: solve <v, n1> = o1, <v, n2> = o2 by Cramer
            d = la.cross2(n1, n2)
            x = (o1 * n2[1] - o2 * n1[1]) * d
            y = (o2 * n1[0] - o1 * n2[0]) * d
            verts.append((x, y))
        if len(set(verts)) != r:
            continue
        poly = convex_hull(verts)
        if poly.dim != 2 or len(poly.facets) != r:
            continue
        if {hs.normal for hs, _ in poly.facets} != set(rays):
            continue
        if is_smooth(poly):
            return poly
    raise GeometryError("retry budget exhausted generating a smooth polygon")


def _roof_functions(
    rng: random.Random, base: LatticePolytope, size_bound: int
) -> list[tuple[int, int, int]]:
    out = []
    for _ in range(rng.randrange(1, 5)):
        alpha = rng.randrange(-2, 3)
        beta = rng.randrange(-2, 3)
        low = min(alpha * x + beta * y for x, y in base.vertices)
        gamma = rng.randrange(1, size_bound + 1) - low
        out.append((alpha, beta, gamma))
    return out


def _prism_vertices(
    base: LatticePolytope, roofs: list[tuple[int, int, int]]
) -> list[Vec] | None:
    """Vertices of {(x, y, z): (x, y) in base, 0 <= z <= min of the roofs},
    or None if any vertex is not a lattice point."""
    normals = [(hs.normal[0], hs.normal[1], 0, hs.offset) for hs, _ in base.facets]
    normals.append((0, 0, 1, 0))
    normals.extend((-a, -b, -1, -g) for a, b, g in roofs)
    pts = set()
    n = len(normals)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                rows = [normals[i][:3], normals[j][:3], normals[k][:3]]
                rhs = [normals[i][3], normals[j][3], normals[k][3]]
                d = la.det(tuple(rows))
                if d == 0:
                    continue
                sol = tuple(
                    Fraction(la.det(tuple(
                        r[:c] + (rhs[ri],) + r[c + 1:]
                        for ri, r in enumerate(rows)
                    )), d)
                    for c in range(3)
                )
                if all(
                    a * sol[0] + b * sol[1] + cc * sol[2] >= o
                    for a, b, cc, o in normals
                ):
                    pts.add(sol)
    verts = []
    for p in pts:
        if any(c.denominator != 1 for c in p):
            return None
        verts.append(tuple(int(c) for c in p))
    return verts


def gen_random_fibered(seed: int, size_bound: int) -> FiberedPrism:
    """A random smooth fibered prism with flat bottom: a smooth base polygon
    under a roof that is the minimum of a few integral affine functions,
    rejection-sampled until the result is smooth."""
    if size_bound < 1:
        raise GeometryError("size bound must be >= 1")
    rng = random.Random(seed)
    for _ in range(RETRY_BUDGET):
        base = gen_random_smooth_polygon(rng.randrange(2**30), size_bound)
        roofs = _roof_functions(rng, base, size_bound)
        verts = _prism_vertices(base, roofs)
        if verts is None:
            continue
        p = convex_hull(verts)
        if p.dim != 3 or not is_smooth(p):
            continue
        found = detect_fibered(p)
        if found is not None and found.irreducible:
            return found
    raise GeometryError("retry budget exhausted generating a fibered prism")


def gen_random_3polytope(seed: int, size_bound: int) -> LatticePolytope:
    """Hull of a handful of random points in a box; used for oracle-level
    self-tests that need arbitrary (not necessarily nice) 3-polytopes."""
    rng = random.Random(seed)
    for _ in range(RETRY_BUDGET):
        pts = [
            tuple(rng.randrange(size_bound + 1) for _ in range(3))
            for _ in range(rng.randrange(4, 9))
        ]
        p = convex_hull(pts)
        if p.dim == 3:
            return p
    raise GeometryError("retry budget exhausted generating a 3-polytope")
