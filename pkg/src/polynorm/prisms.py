"""Normality certificates built from prisms over smooth polygons.

A certificate exhibits a polytope as a union of pieces, each of which is
normal for a structural reason (a parallelepiped, a prism over a basic
triangle with complemented plane lattice, an upright prism, a slice, or a
piece small enough to check exhaustively).  Validity is the half-integer
cover test: every point of (1/2)M in the target lies in some piece, so any
lattice point of the double dilate decomposes inside one piece.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import intlinalg as la
from .classify import is_basic_triangle, is_smooth
from .cover import basic_triangulation, parallelogram_cover
from .intlinalg import Vec
from .lattice import (
    GeometryError,
    LatticePolytope,
    convex_hull,
    dilate,
    full_dim_coords,
    minkowski_sum,
    vertical_column_ints,
)
from .normality import PairDecomposition, decompose_point, is_normal

WITNESS_KINDS = (
    "parallelepiped",
    "prism_A_plus_I",
    "upright_prism_QA",
    "slice",
    "exhaustive",
)


class CertificateError(GeometryError):
    """A certificate failed structural or cover verification."""


def raster_gaps(
    target: LatticePolytope, pieces: list[LatticePolytope]
) -> list[Vec]:
    """Half-integer points of the target (as lattice points of its double
    dilate) lying in no piece."""
    import numpy as np

    pts = np.array(dilate(target, 2).lattice_points(), dtype=np.int64)
    if len(pts) == 0:
        return []
    covered = np.zeros(len(pts), dtype=bool)
    for piece in pieces:
        hs = piece.halfspaces
        normals = np.array([h.normal for h in hs], dtype=np.int64)
        offsets = np.array([2 * h.offset for h in hs], dtype=np.int64)
        covered |= np.all(pts @ normals.T >= offsets, axis=1)
        if covered.all():
            return []
    return [tuple(int(c) for c in p) for p in pts[~covered]]


@dataclass(frozen=True)
class CertificatePiece:
    polytope: LatticePolytope
    witness_kind: str
    data: tuple = ()


@dataclass(frozen=True)
class NormalityCertificate:
    """target = union of pieces, each normal by its witness."""

    target: LatticePolytope
    pieces: tuple[CertificatePiece, ...] = field(default_factory=tuple)

    def verify(self) -> None:
        """Raise CertificateError unless every piece sits inside the target,
        re-verifies its witness, and the pieces cover the half-integer
        raster of the target."""
        for piece in self.pieces:
            if piece.witness_kind not in WITNESS_KINDS:
                raise CertificateError(f"unknown witness kind {piece.witness_kind}")
            if not all(self.target.contains(v) for v in piece.polytope.vertices):
                raise CertificateError("piece escapes the target")
            _verify_piece(piece)
        uncovered = raster_gaps(self.target, [p.polytope for p in self.pieces])
        if uncovered:
            raise CertificateError(f"half-integer point {uncovered[0]}/2 is uncovered")

    def decompose(self, m: Vec) -> PairDecomposition:
        """Split m in (2 * target) cap M inside the piece containing m/2."""
        for piece in self.pieces:
            if piece.polytope.contains_scaled(m, 2):
                parts = decompose_point(piece.polytope, m, 2)
                if parts is not None:
                    return PairDecomposition(m, parts[0], parts[1])
        raise CertificateError(f"no piece decomposes {m}")


def _is_parallelepiped(p: LatticePolytope) -> bool:
    """Is p a Minkowski sum of <= 3 independent lattice segments?"""
    d = p.dim
    verts = p.vertices
    if len(verts) != 2**d:
        return False
    base = verts[0]
    offsets = [la.vsub(v, base) for v in verts[1:]]
    for gens in itertools.combinations(offsets, d):
        sums = {
            tuple(sum(g[i] for g in sel) for i in range(p.ambient))
            for r in range(d + 1)
            for sel in itertools.combinations(gens, r)
        }
        if len(sums) == 2**d and sums == set(offsets) | {(0,) * p.ambient}:
            return True
    return False


def _segment_direction(i: LatticePolytope) -> Vec:
    if i.dim != 1 or len(i.vertices) != 2:
        raise GeometryError("expected a lattice segment")
    return la.vsub(i.vertices[1], i.vertices[0])


def _plane_basis(a: LatticePolytope) -> tuple[Vec, Vec]:
    v0 = a.vertices[0]
    u1 = la.vsub(a.vertices[1], v0)
    for v in a.vertices[2:]:
        u2 = la.vsub(v, v0)
        if any(la.cross(u1, u2)):
            return u1, u2
    raise GeometryError("polygon is degenerate")


def _verify_piece(piece: CertificatePiece) -> None:
    p = piece.polytope
    kind = piece.witness_kind
    if kind == "parallelepiped":
        if not _is_parallelepiped(p):
            raise CertificateError("parallelepiped witness fails shape check")
    elif kind == "prism_A_plus_I":
        tri, seg = piece.data
        small, _, _ = full_dim_coords(tri)
        if not is_basic_triangle(small):
            raise CertificateError("prism witness: triangle is not basic")
        u1, u2 = _plane_basis(tri)
        w = _segment_direction(seg)
        if abs(la.det((u1, u2, w))) != 1:
            raise CertificateError("prism witness: plane lattice not complemented")
        if minkowski_sum(tri, seg) != p:
            raise CertificateError("prism witness: piece is not triangle + segment")
    # upright_prism_QA, slice, exhaustive: normality by oracle below
    if not is_normal(p):
        raise CertificateError(f"piece is not normal ({kind})")


def certify_prism(a: LatticePolytope, i: LatticePolytope) -> NormalityCertificate:
    """Certificate for A + I, a slanted prism over a smooth polygon.

    Non-basic A is covered by parallelograms, giving parallelepiped pieces;
    basic A needs the segment direction to complement the plane lattice and
    gives a single prism piece.
    """
    if a.dim != 2 or a.ambient != 3:
        raise GeometryError("prism base must be a 2-polytope in three dimensions")
    w = _segment_direction(i)
    u1, u2 = _plane_basis(a)
    if la.det((u1, u2, w)) == 0:
        raise GeometryError("segment is parallel to the polygon's plane")
    small, _, _ = full_dim_coords(a)
    target = minkowski_sum(a, i)
    if is_basic_triangle(small):
        if abs(la.det((u1, u2, w))) != 1:
            raise GeometryError(
                "basic triangle prism needs a lattice-complementing segment"
            )
        piece = CertificatePiece(target, "prism_A_plus_I", (a, i))
        return NormalityCertificate(target, (piece,))
    if not is_smooth(small):
        raise GeometryError("prism base must be smooth")
    cover = parallelogram_cover(a)
    pieces = tuple(
        CertificatePiece(minkowski_sum(par, i), "parallelepiped")
        for par in cover.pieces
    )
    return NormalityCertificate(target, pieces)


def _project_xy(v: Vec) -> Vec:
    return (v[0], v[1])


def build_QA(
    a: LatticePolytope, i: LatticePolytope, floor_level: int
) -> LatticePolytope:
    """Hull of the vertical projection of A at the floor level together with
    the slanted prism A + I: an upright prism with roof A + I."""
    if a.dim != 2 or a.ambient != 3:
        raise GeometryError("roof must be a 2-polytope in three dimensions")
    top = minkowski_sum(a, i)
    if min(v[2] for v in top.vertices) < floor_level:
        raise GeometryError("prism A + I dips below the floor")
    base = [_project_xy(v) for v in a.vertices]
    if convex_hull(base).dim != 2:
        raise GeometryError("roof is vertical: projection degenerates")
    return convex_hull(
        [(x, y, floor_level) for x, y in base] + list(top.vertices)
    )


def certify_QA(
    a: LatticePolytope, i: LatticePolytope, floor_level: int = 0
) -> NormalityCertificate:
    """Certificate for Q(A): the slanted prism A + I on top, upright prisms
    over a basic triangulation of the projection below."""
    small, _, _ = full_dim_coords(a)
    if is_basic_triangle(small):
        raise GeometryError("upright prism certificate needs a non-basic roof")
    if not is_smooth(small):
        raise GeometryError("roof must be smooth")
    q = build_QA(a, i, floor_level)
    pieces = list(certify_prism(a, i).pieces)
    for tri in basic_triangulation(convex_hull([_project_xy(v) for v in a.vertices])):
        pts = []
        for u in tri.lattice_points():
            zr = vertical_column_ints(q, u)
            if zr is None:
                raise GeometryError("empty column over a triangulation vertex")
            pts.append((u[0], u[1], zr[0]))
            pts.append((u[0], u[1], zr[1]))
        pieces.append(CertificatePiece(convex_hull(pts), "upright_prism_QA"))
    return NormalityCertificate(q, tuple(pieces))
