"""Constructive 2D machinery: parallelogram covers of smooth polygons and
full lattice triangulations into basic triangles.

The cover construction follows a three-step recursion: cover the strip of
lattice distance <= 1 off every edge with slanted parallelograms, recurse on
the convex hull of the interior lattice points, and handle the special case
where that interior hull is a basic triangle by cutting once and covering
the rest with strips.  Pieces may overlap; validity is union equality,
checked on the half-integer raster.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlinalg as la
from .classify import is_basic_triangle, is_smooth, normalized_area
from .intlinalg import Vec
from .lattice import (
    AffineUnimodularMap,
    GeometryError,
    HalfSpace,
    LatticePolytope,
    apply_map,
    convex_hull,
    dilate,
    full_dim_coords,
)


class CoverError(GeometryError):
    """The cover construction hit an input outside its hypotheses."""


@dataclass(frozen=True)
class ParallelogramCover:
    """A smooth polygon covered by lattice parallelograms."""

    base: LatticePolytope
    pieces: tuple[LatticePolytope, ...]

    def verify(self) -> None:
        """Raise CoverError unless all pieces are parallelograms inside the
        base whose union covers every half-integer point of it."""
        for piece in self.pieces:
            if not is_parallelogram(piece):
                raise CoverError(f"piece {piece.vertices} is not a parallelogram")
            if not all(self.base.contains(v) for v in piece.vertices):
                raise CoverError("piece escapes the base polygon")
        from .prisms import raster_gaps

        uncovered = raster_gaps(self.base, list(self.pieces))
        if uncovered:
            raise CoverError(f"half-integer point {uncovered[0]}/2 is uncovered")


def is_parallelogram(p: LatticePolytope) -> bool:
    if p.dim != 2 or len(p.vertices) != 4:
        return False
    a, b, c, d = p.vertices  # lex sorted: extremes pair up across the middle
    return la.vadd(a, d) == la.vadd(b, c)


def interior_lattice_points(p: LatticePolytope) -> tuple[Vec, ...]:
    out = []
    for m in p.lattice_points():
        if all(hs.eval(m) > 0 for hs, _ in p.facets) and not p.equalities:
            out.append(m)
        elif p.equalities:
            raise GeometryError("interior points need a full-dimensional polytope")
    return tuple(out)


# ---------------------------------------------------------------------------
# strips
# ---------------------------------------------------------------------------


def _clip_below(ring: list[Vec], level: int) -> list[Vec]:
    """Clip a CCW polygon ring against y <= level; intersections must land on
    lattice points (they do for smooth polygons, by the construction)."""
    out: list[tuple[Fraction, Fraction]] = []
    k = len(ring)
    for i in range(k):
        p, q = ring[i], ring[(i + 1) % k]
        pin, qin = p[1] <= level, q[1] <= level
        if pin:
            out.append((Fraction(p[0]), Fraction(p[1])))
        if pin != qin:
            t = Fraction(level - p[1], q[1] - p[1])
            out.append((p[0] + t * (q[0] - p[0]), Fraction(level)))
    pts = []
    for x, y in out:
        if x.denominator != 1:
            raise CoverError("strip boundary crossed at a non-lattice point")
        pts.append((int(x), int(y)))
    return pts


def _ring(p: LatticePolytope) -> list[Vec]:
    edges = {fv[0]: fv[1] for _, fv in p.facets}
    start = min(edges)
    ring = [start]
    while edges[ring[-1]] != start:
        ring.append(edges[ring[-1]])
    return ring


def _normalize_to_edge(
    a: LatticePolytope, facet_idx: int
) -> tuple[AffineUnimodularMap, LatticePolytope]:
    """Map the polygon so the chosen edge lies on y = 0 with A in y >= 0."""
    hs = a.facets[facet_idx][0]
    u = la.complete_to_unimodular(hs.normal)
    tmap = AffineUnimodularMap(u, (0, -hs.offset))
    return tmap, apply_map(tmap, a)


def _cover_strip_normalized(f: LatticePolytope) -> list[LatticePolytope]:
    """Cover a polygon lying in 0 <= y <= 1 (bottom and top both edges) by
    slanted lattice parallelograms with vertices on the two lines."""
    ys = {v[1] for v in f.vertices}
    if not ys <= {0, 1}:
        raise CoverError("strip is not contained in 0 <= y <= 1")
    bottom = sorted({v[0] for v in f.vertices if v[1] == 0})
    top = sorted({v[0] for v in f.vertices if v[1] == 1})
    if len(bottom) < 2 or len(top) < 2:
        raise CoverError("strip degenerates to a triangle")
    b0, b1 = bottom[0], bottom[-1]
    t0, t1 = top[0], top[-1]
    a = b1 - b0
    t = t1 - t0
    pieces = []
    if a >= t:
        for i in range(a - t + 1):
            pieces.append(
                convex_hull([(b0 + i, 0), (b0 + i + t, 0), (t0, 1), (t1, 1)])
            )
    else:
        for i in range(t - a + 1):
            pieces.append(
                convex_hull([(b0, 0), (b1, 0), (t0 + i, 1), (t0 + i + a, 1)])
            )
    return pieces


def _edge_strip(a: LatticePolytope, facet_idx: int) -> list[LatticePolytope]:
    """Parallelogram cover of F(E) = A cut to lattice distance <= 1 off the
    supporting line of edge E."""
    tmap, moved = _normalize_to_edge(a, facet_idx)
    clipped = _clip_below(_ring(moved), 1)
    f = convex_hull(clipped)
    if f.dim != 2:
        raise CoverError("edge strip is degenerate")
    inv = tmap.inverse()
    return [apply_map(inv, piece) for piece in _cover_strip_normalized(f)]


# ---------------------------------------------------------------------------
# the cover recursion
# ---------------------------------------------------------------------------

_BASIC_INTERIOR = ((1, 1), (2, 1), (1, 2))


def _basic_interior_maps(a0: LatticePolytope) -> list[AffineUnimodularMap]:
    """All affine unimodular maps sending the basic triangle a0 onto the
    reference triangle Conv{(1,1),(2,1),(1,2)}."""
    import itertools

    p0, p1, p2 = a0.vertices
    maps = []
    for t0, t1, t2 in itertools.permutations(_BASIC_INTERIOR):
        pm = la.transpose((la.vsub(p1, p0), la.vsub(p2, p0)))
        tm = la.transpose((la.vsub(t1, t0), la.vsub(t2, t0)))
        lin = la.mat_mul(tm, la.unimodular_inverse(pm))
        tr = la.vsub(t0, la.mat_vec(lin, p0))
        maps.append(AffineUnimodularMap(lin, tr))
    return maps


def _cover_basic_interior(a: LatticePolytope) -> list[LatticePolytope]:
    """Step (c): the interior hull is a basic triangle.  Position A as the
    4-fold dilated basic triangle (with corners possibly cut), peel the
    bottom strip once, and cover the remainder by strips."""
    a0 = convex_hull(interior_lattice_points(a))
    for tmap in _basic_interior_maps(a0):
        moved = apply_map(tmap, a)
        lo = min(v[1] for v in moved.vertices)
        if lo != 0 or max(v[1] for v in moved.vertices) > 4:
            continue
        if sum(1 for v in moved.vertices if v[1] == 0) < 2:
            continue
        bottom_idx = next(
            i
            for i, (hs, _) in enumerate(moved.facets)
            if hs.normal == (0, 1) and hs.offset == 0
        )
        pieces = _edge_strip(moved, bottom_idx)
        upper_ring = [(x, -y) for x, y in _clip_below([(x, -y) for x, y in _ring(moved)][::-1], -1)]
        upper = convex_hull(upper_ring)
        pieces.extend(_cover_polygon(upper))
        inv = tmap.inverse()
        return [apply_map(inv, piece) for piece in pieces]
    raise CoverError("could not position the basic interior hull")


def _cover_polygon(a: LatticePolytope) -> list[LatticePolytope]:
    if is_parallelogram(a):
        return [a]
    interior = interior_lattice_points(a)
    a0 = convex_hull(interior) if interior else None
    if a0 is None or a0.dim <= 1:
        pieces = []
        for i in range(len(a.facets)):
            pieces.extend(_edge_strip(a, i))
        return pieces
    if is_basic_triangle(a0):
        return _cover_basic_interior(a)
    if not is_smooth(a0):  # the interior hull of a smooth polygon is smooth
        raise CoverError("interior hull is not smooth")
    pieces = []
    for i in range(len(a.facets)):
        pieces.extend(_edge_strip(a, i))
    pieces.extend(_cover_polygon(a0))
    return pieces


def parallelogram_cover(a: LatticePolytope) -> ParallelogramCover:
    """Cover a smooth non-basic lattice polygon by lattice parallelograms.

    Works for polygons embedded in a 2-plane of a larger ambient lattice;
    smoothness is judged in the polygon's own plane lattice.
    """
    if a.dim != 2:
        raise GeometryError("input must be 2-dimensional")
    if a.ambient == 2:
        small, embed = a, None
    else:
        small, embed_fn, _ = full_dim_coords(a)
        embed = embed_fn
    if not is_smooth(small):
        raise CoverError("parallelogram cover requires a smooth polygon")
    if is_basic_triangle(small):
        raise CoverError("a basic triangle admits no parallelogram cover")
    pieces = _cover_polygon(small)
    if embed is not None:
        pieces = [convex_hull([embed(v) for v in piece.vertices]) for piece in pieces]
    cover = ParallelogramCover(a, tuple(pieces))
    cover.verify()
    return cover


# ---------------------------------------------------------------------------
# basic triangulations
# ---------------------------------------------------------------------------


def _triangle_area2(p: Vec, q: Vec, r: Vec) -> int:
    return abs(la.cross2(la.vsub(q, p), la.vsub(r, p)))


def _refine(tri: tuple[Vec, Vec, Vec], out: list[tuple[Vec, Vec, Vec]]) -> None:
    p, q, r = tri
    if _triangle_area2(p, q, r) == 1:
        out.append(tri)
        return
    t = convex_hull([p, q, r])
    extra = sorted(set(t.lattice_points()) - {p, q, r})
    m = extra[0]
    sides = [(p, q, r), (q, r, p), (r, p, q)]
    for a, b, c in sides:
        if la.cross2(la.vsub(b, a), la.vsub(m, a)) == 0:  # m on edge ab
            _refine((a, m, c), out)
            _refine((m, b, c), out)
            return
    _refine((p, q, m), out)
    _refine((q, r, m), out)
    _refine((r, p, m), out)


def basic_triangulation(b: LatticePolytope) -> tuple[LatticePolytope, ...]:
    """Split a lattice polygon into basic triangles with vertices among its
    lattice points.  The triangle count equals the normalized area."""
    if b.dim != 2 or b.ambient != 2:
        raise GeometryError("basic triangulation needs a plane polygon")
    ring = _ring(b)
    v0 = ring[0]
    tris: list[tuple[Vec, Vec, Vec]] = []
    for i in range(1, len(ring) - 1):
        _refine((v0, ring[i], ring[i + 1]), tris)
    assert len(tris) == normalized_area(b)
    return tuple(convex_hull(t) for t in tris)
