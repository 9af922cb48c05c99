"""Fibered 3-polytopes: upright prisms over a smooth polygon base.

A 3-polytope is fibered when, after a unimodular change of coordinates, it
sits inside B x R for a polygon B with every edge of B carrying a vertical
facet.  Such polytopes are the lattice counterpart of toric 3-folds fibered
over the projective line; the roof facets tile B under the vertical
projection, and normality is certified facet by facet.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlinalg as la
from .classify import is_basic_triangle, is_smooth
from .cover import basic_triangulation, parallelogram_cover
from .intlinalg import Vec
from .lattice import (
    AffineUnimodularMap,
    GeometryError,
    LatticePolytope,
    apply_map,
    convex_hull,
    dilate,
    full_dim_coords,
    minkowski_sum,
    segment,
    vertical_column,
    vertical_column_ints,
)
from .normality import PairDecomposition, decompose_point
from .prisms import CertificatePiece, NormalityCertificate, _is_parallelepiped

logger = logging.getLogger(__name__)


def project_xy(v: Vec) -> Vec:
    """The vertical projection forgetting the last coordinate."""
    return (v[0], v[1])


@dataclass(frozen=True)
class FiberedPrism:
    """A 3-polytope in prism position: base polygon B in z = 0 coordinates,
    every edge of B backed by a vertical facet, roof facets tiling B.

    `irreducible` records that the bottom is the single flat facet B x {0};
    `transform` maps the original polytope onto `polytope`.
    """

    polytope: LatticePolytope
    base: LatticePolytope
    roof_facets: tuple[LatticePolytope, ...]
    floor_facets: tuple[LatticePolytope, ...]
    irreducible: bool
    axis: Vec
    transform: AffineUnimodularMap

    @staticmethod
    def projection(v: Vec) -> Vec:
        return project_xy(v)


def _axis_candidates(p: LatticePolytope) -> list[Vec]:
    dirs = set()
    for a, b in p.edges():
        d = la.primitive(la.vsub(b, a))
        dirs.add(d)
        dirs.add(la.vneg(d))
    # short directions first, then highest coordinate axis, so a cube
    # picks the z-axis
    return sorted(
        dirs, key=lambda v: (sum(abs(c) for c in v), tuple(-c for c in reversed(v)))
    )


def _vertical_map(d: Vec) -> la.Mat:
    """A unimodular matrix sending d to e3, keeping x and y fixed when the
    axis already points along z."""
    if abs(d[2]) == 1:
        lift = ((1, 0, d[0]), (0, 1, d[1]), (0, 0, d[2]))
    else:
        lift = la.transpose(la.complete_to_unimodular(d))
    return la.unimodular_inverse(lift)


def _try_axis(p: LatticePolytope, d: Vec) -> FiberedPrism | None:
    lin = _vertical_map(d)  # sends d to e3
    shift = -min(la.dot(lin[2], v) for v in p.vertices)
    tmap = AffineUnimodularMap(lin, (0, 0, shift))
    moved = apply_map(tmap, p)
    base = convex_hull([project_xy(v) for v in moved.vertices])
    walls = {}
    roof, floor = [], []
    for hs, fv in moved.facets:
        c = hs.normal[2]
        if c == 0:
            walls[(hs.normal[0], hs.normal[1], hs.offset)] = fv
        elif c < 0:
            roof.append(fv)
        else:
            floor.append(fv)
    for hs, _ in base.facets:
        if (hs.normal[0], hs.normal[1], hs.offset) not in walls:
            return None
    irreducible = len(floor) == 1 and moved.facets and any(
        hs.normal == (0, 0, 1) and hs.offset == 0 for hs, _ in moved.facets
    )
    return FiberedPrism(
        polytope=moved,
        base=base,
        roof_facets=tuple(sorted((convex_hull(fv) for fv in roof),
                                 key=lambda q: q.vertices)),
        floor_facets=tuple(sorted((convex_hull(fv) for fv in floor),
                                  key=lambda q: q.vertices)),
        irreducible=irreducible,
        axis=d,
        transform=tmap,
    )


def detect_fibered(p: LatticePolytope) -> FiberedPrism | None:
    """Search the primitive edge directions of P for a vertical axis making
    P an upright prism over its shadow; None when no axis works."""
    if p.dim != 3 or p.ambient != 3:
        raise GeometryError("fibered detection needs a full 3-polytope")
    best = None
    for d in _axis_candidates(p):
        found = _try_axis(p, d)
        if found is None:
            continue
        if found.irreducible:
            return found
        if best is None:
            best = found
    return best


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


def _roof_plane_normal(a: LatticePolytope) -> Vec:
    v0 = a.vertices[0]
    u1 = la.vsub(a.vertices[1], v0)
    for v in a.vertices[2:]:
        n = la.cross(u1, la.vsub(v, v0))
        if any(n):
            return la.primitive(n)
    raise GeometryError("degenerate roof facet")


def _column_prism(q: LatticePolytope, tri: LatticePolytope) -> LatticePolytope:
    """Hull of the lattice points of q over a basic triangle: the three
    integer column endpoints determine it."""
    pts = []
    for u in tri.lattice_points():
        zr = vertical_column_ints(q, u)
        if zr is None:
            raise GeometryError("empty column over a triangulation vertex")
        pts.append((u[0], u[1], zr[0]))
        pts.append((u[0], u[1], zr[1]))
    return convex_hull(pts)


def _upright_pieces(
    q: LatticePolytope, roof: LatticePolytope
) -> list[CertificatePiece]:
    """Pieces for an upright prism q with floor at z = 0 and roof facet
    `roof`: columns over a basic triangulation of the shadow, plus a unit
    slab under the roof when the columns stop short of it."""
    pieces = []
    shadow = convex_hull([project_xy(v) for v in roof.vertices])
    for tri in basic_triangulation(shadow):
        pieces.append(CertificatePiece(_column_prism(q, tri), "upright_prism_QA"))
    # where the roof plane has fractional heights the lattice columns stop
    # short of it, so a unit slab hanging off the roof is added whenever it
    # fits inside the prism
    if min(v[2] for v in roof.vertices) >= 1:
        drop = segment((0, 0, -1), (0, 0, 0))
        for par in parallelogram_cover(roof).pieces:
            pieces.append(
                CertificatePiece(minkowski_sum(par, drop), "parallelepiped")
            )
    covered = _locally_covered(q, pieces)
    if not covered:
        logger.warning(
            "falling back to an exhaustive witness for prism piece %s",
            q.vertices,
        )
        pieces.append(CertificatePiece(q, "exhaustive"))
    return pieces


def _locally_covered(q: LatticePolytope, pieces: list[CertificatePiece]) -> bool:
    from .prisms import raster_gaps

    return not raster_gaps(q, [piece.polytope for piece in pieces])


def _nearest_edge_points(
    p: LatticePolytope, a: LatticePolytope
) -> tuple[Vec, Vec, Vec]:
    """For each vertex of the basic roof triangle a, the nearest lattice
    point along the unique edge of P leaving a at that vertex."""
    averts = set(a.vertices)
    out = []
    for v in a.vertices:
        away = [w for w in p.vertex_neighbors(v) if w not in averts]
        if len(away) != 1:
            raise GeometryError("roof triangle vertex without a unique exit edge")
        out.append(la.vadd(v, la.primitive(la.vsub(away[0], v))))
    return tuple(out)


def certify_fibered(f: FiberedPrism) -> NormalityCertificate:
    """Normality certificate for a smooth fibered prism with flat bottom.

    Each roof facet contributes the pieces of its upright prism; a basic
    roof triangle away from the walls is handled by slicing down to the
    nearest parallel lattice triangle.
    """
    p = f.polytope
    if not f.irreducible:
        raise GeometryError("certificate needs the flat-bottom prism shape")
    if not is_smooth(p):
        raise GeometryError("certificate needs a smooth polytope")
    if _is_parallelepiped(p):
        cert = NormalityCertificate(p, (CertificatePiece(p, "parallelepiped"),))
        cert.verify()
        return cert
    pieces: list[CertificatePiece] = []
    wall_eval = [hs for hs, _ in f.base.facets]
    for a in f.roof_facets:
        shadow = convex_hull([project_xy(v) for v in a.vertices])
        q = convex_hull(
            [(x, y, 0) for x, y in shadow.vertices] + list(a.vertices)
        )
        small, _, _ = full_dim_coords(a)
        if not is_basic_triangle(small):
            pieces.extend(_upright_pieces(q, a))
            continue
        touches_wall = any(
            hs.eval(project_xy(v)) == 0 for v in a.vertices for hs in wall_eval
        )
        if touches_wall:
            # the triangle's plane lattice is complemented by the vertical
            # direction, making the whole column prism normal
            pieces.append(CertificatePiece(q, "upright_prism_QA"))
            continue
        w = _nearest_edge_points(p, a)
        atil = convex_hull(w)
        pieces.append(
            CertificatePiece(convex_hull(list(a.vertices) + list(w)), "slice")
        )
        tshadow = convex_hull([project_xy(x) for x in atil.vertices])
        qtil = convex_hull(
            [(x, y, 0) for x, y in tshadow.vertices] + list(atil.vertices)
        )
        small_til, _, _ = full_dim_coords(atil)
        if is_basic_triangle(small_til):
            logger.warning(
                "isolated basic roof over basic slice target %s", qtil.vertices
            )
            pieces.append(CertificatePiece(qtil, "exhaustive"))
        else:
            pieces.extend(_upright_pieces(qtil, atil))
    cert = NormalityCertificate(p, tuple(pieces))
    cert.verify()
    return cert


# ---------------------------------------------------------------------------
# pair decomposition
# ---------------------------------------------------------------------------


def _split_columns(u1: Vec, u2: Vec, r1, r2, c: int):
    if not r1[0] + r2[0] <= c <= r1[1] + r2[1]:
        return None
    z1 = min(r1[1], c - r2[0])
    return (u1[0], u1[1], z1), (u2[0], u2[1], c - z1)


def _flip(p: LatticePolytope) -> tuple[LatticePolytope, int]:
    if "fib_flip" not in p._cache:
        zmax = max(v[2] for v in p.vertices)
        lin = ((1, 0, 0), (0, 1, 0), (0, 0, -1))
        flipped = apply_map(AffineUnimodularMap(lin, (0, 0, zmax)), p)
        p._cache["fib_flip"] = (flipped, zmax)
    return p._cache["fib_flip"]


def _cached_column(p: LatticePolytope, u: Vec) -> tuple[int, int] | None:
    cache = p._cache.setdefault("fib_cols", {})
    if u not in cache:
        cache[u] = vertical_column_ints(p, u)
    return cache[u]


def _pairs_for(p: LatticePolytope, u: Vec):
    """Lattice-adjacent vertical line pairs (u1, u2) with u1 + u2 = u inside
    the shadow, with their integer columns, nearest the midpoint first."""
    cache = p._cache.setdefault("fib_pairs", {})
    if u not in cache:
        base = _shadow(p)
        pset = base.lattice_point_set()
        out = []
        for u1 in base.lattice_points():
            u2 = (u[0] - u1[0], u[1] - u1[1])
            if u2 not in pset:
                continue
            delta = (u2[0] - u1[0], u2[1] - u1[1])
            if delta != (0, 0) and gcd(delta[0], delta[1]) != 1:
                continue
            r1 = _cached_column(p, u1)
            r2 = _cached_column(p, u2)
            if r1 is None or r2 is None:
                continue
            out.append((abs(delta[0]) + abs(delta[1]), u1, u2, r1, r2))
        out.sort()
        cache[u] = tuple(out)
    return cache[u]


def _shadow(p: LatticePolytope) -> LatticePolytope:
    if "fib_shadow" not in p._cache:
        p._cache["fib_shadow"] = convex_hull([project_xy(v) for v in p.vertices])
    return p._cache["fib_shadow"]


def _facet_polytope(p: LatticePolytope, idx: int) -> LatticePolytope:
    cache = p._cache.setdefault("fib_facets", {})
    if idx not in cache:
        cache[idx] = convex_hull(p.facets[idx][1])
    return cache[idx]


def _polygon_pair(face: LatticePolytope, m: Vec) -> tuple[Vec, Vec] | None:
    """Split m in (2 * face) cap M across the face's lattice points, trying
    points nearest m/2 first."""
    pts = sorted(
        face.lattice_points(),
        key=lambda x: sum(abs(2 * a - b) for a, b in zip(x, m)),
    )
    pset = face.lattice_point_set()
    for x in pts:
        y = la.vsub(m, x)
        if y in pset:
            return x, y
    return None


def _solve_below(p: LatticePolytope, m: Vec) -> tuple[Vec, Vec] | None:
    """Pair decomposition for m in 2P at or below its column's midpoint,
    searching lattice-adjacent vertical line pairs near the midpoint."""
    u = project_xy(m)
    c = m[2]
    for _, u1, u2, r1, r2 in _pairs_for(p, u):
        found = _split_columns(u1, u2, r1, r2, c)
        if found:
            return found
    return None


def fibered_pair_decompose(f: FiberedPrism, m: Vec) -> PairDecomposition:
    """Write m in (2P) cap M as a sum of two lattice points of P.

    Boundary points split inside their face; interior points are flipped
    below the midpoint of their vertical line and split across a pair of
    adjacent vertical lines.  A logged exhaustive fallback covers inputs
    outside the constructive procedure's reach.
    """
    p = f.polytope
    if not p.contains_scaled(m, 2):
        raise GeometryError(f"{m} is not in the double dilate")
    for idx, (hs, _) in enumerate(p.facets):
        if la.dot(hs.normal, m) == 2 * hs.offset:
            parts = _polygon_pair(_facet_polytope(p, idx), m)
            if parts is not None:
                return PairDecomposition(m, parts[0], parts[1])
    if "fib_double" not in p._cache:
        p._cache["fib_double"] = dilate(p, 2)
    col = vertical_column(p._cache["fib_double"], project_xy(m))
    if Fraction(2 * m[2]) > col[0] + col[1]:
        flipped, zmax = _flip(p)
        found = _solve_below(flipped, (m[0], m[1], 2 * zmax - m[2]))
        if found is not None:
            a, b = found
            return PairDecomposition(
                m, (a[0], a[1], zmax - a[2]), (b[0], b[1], zmax - b[2])
            )
    else:
        found = _solve_below(p, m)
        if found is not None:
            return PairDecomposition(m, found[0], found[1])
    logger.warning(
        "constructive pair decomposition failed for %s on %s; "
        "falling back to exhaustive search",
        m,
        p.vertices,
    )
    parts = decompose_point(p, m, 2)
    if parts is None:
        raise GeometryError(f"{m} admits no pair decomposition")
    return PairDecomposition(m, parts[0], parts[1])
