"""Exact integer lattice geometry in ambient dimension 1..3.

Points are tuples of Python ints, polytopes carry both a vertex list and an
exact inward-oriented H-representation (plus equality constraints when the
polytope is not full-dimensional).  Everything is immutable; all operations
are pure functions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Iterable, Sequence

import numpy as np

from . import intlinalg as la
from . import kernels
from .intlinalg import Mat, Vec

#: Coordinates are capped so that every predicate (3D cross product followed
#: by a dot product) stays inside exact int64 range in the fast paths.
COORD_LIMIT = 10**6

#: Above this magnitude the vectorized int64 hull could overflow; a pure
#: Python-int path takes over.
_INT64_SAFE = 20_000


class GeometryError(ValueError):
    """Invalid geometric input (dimension mismatch, degenerate data, ...)."""


class CoordinateOverflowError(OverflowError):
    """A coordinate exceeded the exact-arithmetic width policy."""


def _check_point(p: Sequence[int]) -> Vec:
    t = tuple(p)
    for x in t:
        if not isinstance(x, (int, np.integer)):
            raise GeometryError(f"non-integer coordinate {x!r}")
        if abs(x) > COORD_LIMIT:
            raise CoordinateOverflowError(f"coordinate {x} exceeds limit {COORD_LIMIT}")
    return tuple(int(x) for x in t)


@dataclass(frozen=True)
class HalfSpace:
    """Inequality <normal, x> >= offset with primitive inward normal."""

    normal: Vec
    offset: int

    def __post_init__(self) -> None:
        if all(c == 0 for c in self.normal):
            raise GeometryError("halfspace normal must be nonzero")
        if la.vgcd(self.normal) != 1:
            raise GeometryError(f"halfspace normal {self.normal} is not primitive")

    def eval(self, p: Sequence[int]) -> int:
        return la.dot(self.normal, p) - self.offset


@dataclass(frozen=True)
class AffineUnimodularMap:
    """x -> linear @ x + translation with |det(linear)| = 1."""

    linear: Mat
    translation: Vec

    def __post_init__(self) -> None:
        if la.det(self.linear) not in (1, -1):
            raise GeometryError("linear part must have determinant +-1")
        if len(self.translation) != len(self.linear):
            raise GeometryError("translation dimension mismatch")

    @classmethod
    def identity(cls, n: int) -> "AffineUnimodularMap":
        eye = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
        return cls(eye, (0,) * n)

    @classmethod
    def translation_by(cls, v: Sequence[int]) -> "AffineUnimodularMap":
        n = len(v)
        return cls(cls.identity(n).linear, tuple(v))

    def __call__(self, p: Sequence[int]) -> Vec:
        return la.vadd(la.mat_vec(self.linear, p), self.translation)

    def compose(self, other: "AffineUnimodularMap") -> "AffineUnimodularMap":
        """self after other: (self . other)(x) = self(other(x))."""
        lin = la.mat_mul(self.linear, other.linear)
        tr = la.vadd(la.mat_vec(self.linear, other.translation), self.translation)
        return AffineUnimodularMap(lin, tr)

    def inverse(self) -> "AffineUnimodularMap":
        inv = la.unimodular_inverse(self.linear)
        return AffineUnimodularMap(inv, la.vneg(la.mat_vec(inv, self.translation)))


@dataclass(frozen=True)
class LatticePolytope:
    """Lattice polytope given by vertices plus exact H-representation.

    `facets` pairs each inequality with the vertices on its boundary; these
    are codimension-1 faces *within the affine hull*.  `equalities` pin the
    affine hull when dim < ambient.
    """

    vertices: tuple[Vec, ...]
    facets: tuple[tuple[HalfSpace, tuple[Vec, ...]], ...]
    equalities: tuple[tuple[Vec, int], ...]
    dim: int
    ambient: int
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePolytope):
            return NotImplemented
        return self.ambient == other.ambient and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.ambient, self.vertices))

    # -- membership ----------------------------------------------------

    @property
    def halfspaces(self) -> tuple[HalfSpace, ...]:
        out = [hs for hs, _ in self.facets]
        for n, o in self.equalities:
            out.append(HalfSpace(n, o))
            out.append(HalfSpace(la.vneg(n), -o))
        return tuple(out)

    def contains(self, p: Sequence[int]) -> bool:
        return self.contains_scaled(p, 1)

    def contains_scaled(self, p: Sequence[int], denom: int) -> bool:
        """True iff p/denom lies in the polytope (exact, integer-only)."""
        if len(p) != self.ambient:
            raise GeometryError("point dimension mismatch")
        for n, o in self.equalities:
            if la.dot(n, p) != denom * o:
                return False
        for hs, _ in self.facets:
            if la.dot(hs.normal, p) < denom * hs.offset:
                return False
        return True

    # -- derived data --------------------------------------------------

    def bounding_box(self) -> tuple[Vec, Vec]:
        lo = tuple(min(v[i] for v in self.vertices) for i in range(self.ambient))
        hi = tuple(max(v[i] for v in self.vertices) for i in range(self.ambient))
        return lo, hi

    def lattice_points(self) -> tuple[Vec, ...]:
        """All points of P intersected with the integer lattice, lex order."""
        if "pts" not in self._cache:
            lo, hi = self.bounding_box()
            normals = [hs.normal for hs in self.halfspaces]
            offsets = [hs.offset for hs in self.halfspaces]
            arr = kernels.enumerate_box(
                np.array(normals, dtype=np.int64).reshape(len(normals), self.ambient),
                np.array(offsets, dtype=np.int64),
                np.array(lo, dtype=np.int64),
                np.array(hi, dtype=np.int64),
            )
            self._cache["pts"] = tuple(map(tuple, arr.tolist()))
        return self._cache["pts"]

    def lattice_point_set(self) -> frozenset[Vec]:
        if "ptset" not in self._cache:
            self._cache["ptset"] = frozenset(self.lattice_points())
        return self._cache["ptset"]

    def edges(self) -> tuple[tuple[Vec, Vec], ...]:
        """Vertex pairs spanning 1-faces (within the affine hull)."""
        if "edges" in self._cache:
            return self._cache["edges"]
        if self.dim <= 1:
            out: tuple[tuple[Vec, Vec], ...] = (
                ((self.vertices[0], self.vertices[1]),) if self.dim == 1 else ()
            )
        elif self.dim == 2:
            out = tuple(tuple(fv) for _, fv in self.facets)  # type: ignore[misc]
        else:
            incident: dict[Vec, set[int]] = {v: set() for v in self.vertices}
            for i, (_, fv) in enumerate(self.facets):
                for v in fv:
                    incident[v].add(i)
            pairs = []
            for a, b in itertools.combinations(self.vertices, 2):
                if len(incident[a] & incident[b]) >= 2:
                    pairs.append((a, b))
            out = tuple(pairs)
        self._cache["edges"] = out
        return out

    def vertex_neighbors(self, v: Vec) -> tuple[Vec, ...]:
        nbrs = []
        for a, b in self.edges():
            if a == v:
                nbrs.append(b)
            elif b == v:
                nbrs.append(a)
        return tuple(sorted(nbrs))

    def translate(self, t: Sequence[int]) -> "LatticePolytope":
        return apply_map(AffineUnimodularMap.translation_by(t), self)


# ---------------------------------------------------------------------------
# hull construction
# ---------------------------------------------------------------------------


def _monotone_chain(points: list[Vec]) -> list[Vec]:
    """2D convex hull, CCW vertex order, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts
    lower: list[Vec] = []
    for p in pts:
        while len(lower) >= 2 and la.cross2(
            la.vsub(lower[-1], lower[-2]), la.vsub(p, lower[-2])
        ) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and la.cross2(
            la.vsub(upper[-1], upper[-2]), la.vsub(p, upper[-2])
        ) <= 0:
            upper.pop()
        upper.append(p)
    if len(lower) == 2 and lower == upper[::-1]:  # collinear set: a segment
        return lower
    return lower[:-1] + upper[:-1]


def _hull_2d_fulldim(points: list[Vec]) -> tuple[list[Vec], list[tuple[HalfSpace, tuple[Vec, ...]]]]:
    ring = _monotone_chain(points)
    facets = []
    k = len(ring)
    for i in range(k):
        p, q = ring[i], ring[(i + 1) % k]
        e = la.vsub(q, p)
        normal = la.primitive((-e[1], e[0]))  # inward for CCW orientation
        facets.append((HalfSpace(normal, la.dot(normal, p)), (p, q)))
    return ring, facets


def _hull_3d_planes(points: list[Vec]) -> list[tuple[Vec, int]]:
    """Supporting planes (inward primitive normal, offset) of a full-dim set."""
    n = len(points)
    big = any(abs(c) > _INT64_SAFE for p in points for c in p)
    planes: set[tuple[Vec, int]] = set()
    if not big:
        pts = np.array(points, dtype=np.int64)
        idx = np.array(list(itertools.combinations(range(n), 3)), dtype=np.intp)
        v1 = pts[idx[:, 1]] - pts[idx[:, 0]]
        v2 = pts[idx[:, 2]] - pts[idx[:, 0]]
        nors = np.cross(v1, v2)
        nz = np.any(nors != 0, axis=1)
        nors, base = nors[nz], idx[nz, 0]
        g = np.gcd.reduce(np.abs(nors), axis=1)
        nors = nors // g[:, None]
        # canonical sign: first nonzero component positive
        lead = np.where(
            nors[:, 0] != 0,
            np.sign(nors[:, 0]),
            np.where(nors[:, 1] != 0, np.sign(nors[:, 1]), np.sign(nors[:, 2])),
        )
        nors = nors * lead[:, None]
        offs = np.einsum("ij,ij->i", nors, pts[base])
        cand = np.unique(np.hstack([nors, offs[:, None]]), axis=0)
        support = cand[:, :3] @ pts.T - cand[:, 3:4]
        lo = support.min(axis=1)
        hi = support.max(axis=1)
        for row, l, h in zip(cand.tolist(), lo.tolist(), hi.tolist()):
            nv, off = tuple(row[:3]), row[3]
            if l >= 0:
                planes.add((nv, off))
            elif h <= 0:
                planes.add((la.vneg(nv), -off))
    else:
        for i, j, k in itertools.combinations(range(n), 3):
            nv = la.cross(la.vsub(points[j], points[i]), la.vsub(points[k], points[i]))
            if all(c == 0 for c in nv):
                continue
            nv = la.primitive(nv)
            off = la.dot(nv, points[i])
            vals = [la.dot(nv, p) - off for p in points]
            if min(vals) >= 0:
                planes.add((nv, off))
            elif max(vals) <= 0:
                planes.add((la.vneg(nv), -off))
    return sorted(planes)


def _hull_3d_fulldim(points: list[Vec]) -> tuple[list[Vec], list[tuple[HalfSpace, tuple[Vec, ...]]]]:
    planes = _hull_3d_planes(points)
    facets = []
    vertex_set: set[Vec] = set()
    for normal, off in planes:
        on_plane = [p for p in points if la.dot(normal, p) == off]
        if len(on_plane) < 3:
            continue
        # order/reduce the facet polygon in exact 2D plane coordinates
        u = la.complete_to_unimodular(normal)
        flat = [(la.dot(u[0], p), la.dot(u[1], p)) for p in on_plane]
        ring2 = _monotone_chain(flat)
        if len(ring2) < 3:
            continue
        back = {f: p for f, p in zip(flat, on_plane)}
        ring = tuple(back[f] for f in ring2)
        facets.append((HalfSpace(normal, off), ring))
        vertex_set.update(ring)
    vertices = sorted(vertex_set)
    return vertices, facets


def _affine_structure(points: list[Vec]) -> tuple[int, AffineUnimodularMap]:
    """Affine dimension d plus a unimodular map sending the affine hull of
    the points onto the coordinate subspace {x_{d+1} = ... = x_n = 0}."""
    n = len(points[0])
    p0 = min(points)
    diffs = [la.vsub(p, p0) for p in points if p != p0]
    ident = AffineUnimodularMap.identity(n)
    if not diffs:
        return 0, AffineUnimodularMap(ident.linear, la.vneg(p0))
    v1 = la.primitive(diffs[0])
    v2 = None
    for d in diffs[1:]:
        if n == 2:
            if la.cross2(v1, d) != 0:
                v2 = d
                break
        else:
            if any(c != 0 for c in la.cross(v1, d)):
                v2 = d
                break
    if v2 is None:
        dim = 1
        if n == 1:
            return 1, ident
        # unimodular U with U @ v1 = e1
        b = la.transpose(la.complete_to_unimodular(v1))
        cols = list(zip(*b))
        cols = [cols[-1]] + cols[:-1]
        bmat = tuple(zip(*[tuple(c) for c in cols]))
        u = la.unimodular_inverse(tuple(tuple(r) for r in bmat))
    elif n == 3:
        if any(la.det((v1, v2, d)) != 0 for d in diffs):
            return 3, ident
        dim = 2
        w = la.primitive(la.cross(v1, v2))
        u = la.complete_to_unimodular(w)
        # put the normal coordinate last: complete_to_unimodular already has
        # w as its last row, so u is exactly what we need
    else:
        return 2, ident
    lin = tuple(tuple(r) for r in u)
    tr = la.vneg(la.mat_vec(lin, p0))
    return dim, AffineUnimodularMap(lin, tr)


def convex_hull(points: Iterable[Sequence[int]]) -> LatticePolytope:
    """Convex hull of lattice points with exact H-representation.

    Duplicate and non-extreme points are removed; lower-dimensional inputs
    are handled by working inside the affine hull.
    """
    pts = [_check_point(p) for p in points]
    if not pts:
        raise GeometryError("empty point set")
    n = len(pts[0])
    if n not in (1, 2, 3):
        raise GeometryError("ambient dimension must be 1..3")
    if any(len(p) != n for p in pts):
        raise GeometryError("points of mixed dimension")
    pts = sorted(set(pts))

    dim, tmap = _affine_structure(pts)
    mapped = [tmap(p) for p in pts]
    core = [p[:dim] for p in mapped]

    if dim == 0:
        verts_core: list[Vec] = [()]
        facets_core: list[tuple[HalfSpace, tuple[Vec, ...]]] = []
    elif dim == 1:
        xs = sorted(c[0] for c in core)
        a, b = xs[0], xs[-1]
        verts_core = [(a,), (b,)]
        facets_core = [
            (HalfSpace((1,), a), ((a,),)),
            (HalfSpace((-1,), -b), ((b,),)),
        ]
    elif dim == 2:
        verts_core, facets_core = _hull_2d_fulldim(core)
    else:
        verts_core, facets_core = _hull_3d_fulldim(core)

    inv = tmap.inverse()

    def unmap(c: Vec) -> Vec:
        return inv(c + (0,) * (n - dim))

    vertices = tuple(sorted(unmap(c) for c in verts_core))
    facets = []
    for hs, fverts in facets_core:
        # pull <nu, y> >= beta back through y = U x + t
        nu_pad = tuple(hs.normal) + (0,) * (n - dim)
        normal = la.mat_vec(la.transpose(tmap.linear), nu_pad)
        offset = hs.offset - la.dot(nu_pad, tmap.translation)
        facets.append((HalfSpace(normal, offset), tuple(unmap(c) for c in fverts)))
    equalities = []
    for j in range(dim, n):
        row = tmap.linear[j]
        equalities.append((row, -tmap.translation[j]))
    return LatticePolytope(vertices, tuple(facets), tuple(equalities), dim, n)


def segment(p: Sequence[int], q: Sequence[int]) -> LatticePolytope:
    return convex_hull([p, q])


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------


def lattice_points(p: LatticePolytope) -> tuple[Vec, ...]:
    return p.lattice_points()


def minkowski_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    if p.ambient != q.ambient:
        raise GeometryError("Minkowski sum needs equal ambient dimensions")
    return convex_hull([la.vadd(a, b) for a in p.vertices for b in q.vertices])


def dilate(p: LatticePolytope, k: int) -> LatticePolytope:
    """The k-th multiple kP, with face structure carried over directly."""
    if k < 1:
        raise GeometryError("dilation factor must be >= 1")
    if k == 1:
        return p
    scale = lambda v: la.vscale(k, v)  # noqa: E731
    for v in p.vertices:
        _check_point(scale(v))
    vertices = tuple(sorted(scale(v) for v in p.vertices))
    facets = tuple(
        (HalfSpace(hs.normal, k * hs.offset), tuple(scale(v) for v in fv))
        for hs, fv in p.facets
    )
    equalities = tuple((n, k * o) for n, o in p.equalities)
    return LatticePolytope(vertices, facets, equalities, p.dim, p.ambient)


def apply_map(t: AffineUnimodularMap, p: LatticePolytope) -> LatticePolytope:
    if len(t.translation) != p.ambient:
        raise GeometryError("map/polytope dimension mismatch")
    inv_lin_t = la.transpose(la.unimodular_inverse(t.linear))
    vertices = tuple(sorted(_check_point(t(v)) for v in p.vertices))
    facets = []
    for hs, fv in p.facets:
        normal = la.mat_vec(inv_lin_t, hs.normal)
        offset = hs.offset + la.dot(normal, t.translation)
        facets.append((HalfSpace(normal, offset), tuple(t(v) for v in fv)))
    equalities = []
    for n0, o in p.equalities:
        normal = la.mat_vec(inv_lin_t, n0)
        equalities.append((normal, o + la.dot(normal, t.translation)))
    return LatticePolytope(vertices, tuple(facets), tuple(equalities), p.dim, p.ambient)


def vertical_column(p: LatticePolytope, u: Vec) -> tuple["Fraction", "Fraction"] | None:
    """The z-interval of the vertical line over (u, *) inside a 3-polytope,
    as exact fractions, or None when the line misses p."""
    from fractions import Fraction

    lo, hi = None, None
    for hs in p.halfspaces:
        c = hs.normal[-1]
        rest = hs.offset - sum(a * b for a, b in zip(hs.normal[:-1], u))
        if c == 0:
            if rest > 0:
                return None
        elif c > 0:
            bound = Fraction(rest, c)
            lo = bound if lo is None or bound > lo else lo
        else:
            bound = Fraction(rest, c)
            hi = bound if hi is None or bound < hi else hi
    if lo is None or hi is None or lo > hi:
        return None
    return lo, hi


def vertical_column_ints(p: LatticePolytope, u: Vec) -> tuple[int, int] | None:
    """Integer z-range of the vertical line over u inside p, or None."""
    from math import ceil, floor

    col = vertical_column(p, u)
    if col is None:
        return None
    lo, hi = ceil(col[0]), floor(col[1])
    return (lo, hi) if lo <= hi else None


def normalize_position(
    p: LatticePolytope, facet: int | HalfSpace
) -> tuple[AffineUnimodularMap, LatticePolytope]:
    """Map P so the chosen facet lies in (z = 0) with P in (z >= 0)."""
    if isinstance(facet, HalfSpace):
        for i, (hs, _) in enumerate(p.facets):
            if hs == facet:
                facet = i
                break
        else:
            raise GeometryError("halfspace is not a facet of the polytope")
    if not 0 <= facet < len(p.facets):
        raise GeometryError("facet index out of range")
    hs = p.facets[facet][0]
    u = la.complete_to_unimodular(hs.normal)  # last row is the inward normal
    tr = [0] * p.ambient
    tr[-1] = -hs.offset
    tmap = AffineUnimodularMap(u, tuple(tr))
    return tmap, apply_map(tmap, p)


def full_dim_coords(
    p: LatticePolytope,
) -> tuple[LatticePolytope, Callable[[Vec], Vec], Callable[[Vec], Vec]]:
    """View an embedded polytope in exact coordinates of its affine lattice.

    Returns (polytope in dimension p.dim, embed, project) where project maps
    ambient lattice points of the affine hull to the small coordinates and
    embed is its inverse.
    """
    dim, tmap = _affine_structure(list(p.vertices))
    assert dim == p.dim
    inv = tmap.inverse()
    n = p.ambient

    def project(x: Vec) -> Vec:
        return tmap(x)[:dim]

    def embed(y: Vec) -> Vec:
        return inv(tuple(y) + (0,) * (n - dim))

    small = convex_hull([project(v) for v in p.vertices])
    return small, embed, project
