"""Classification of polytopes and vertex cones: simplicity, smoothness,
basic triangles, Hilbert bases, very ampleness."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import intlinalg as la
from .intlinalg import Vec
from .lattice import GeometryError, LatticePolytope, full_dim_coords


def _require_full_dim(p: LatticePolytope) -> None:
    if p.dim != p.ambient:
        raise GeometryError("operation requires a full-dimensional polytope")


@dataclass(frozen=True)
class VertexCone:
    """Cone spanned at `apex` by primitive ray generators.

    The inward facet normals give an exact membership test the Hilbert basis
    computation relies on.
    """

    apex: Vec
    rays: tuple[Vec, ...]
    facet_normals: tuple[Vec, ...]

    @property
    def ambient(self) -> int:
        return len(self.apex)

    def contains(self, x: Vec) -> bool:
        """Membership of a lattice vector in the cone (apex at origin)."""
        return all(la.dot(n, x) >= 0 for n in self.facet_normals)


def _same_sign_nontrivial(coeffs: list[int]) -> bool:
    return (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)) and any(
        c != 0 for c in coeffs
    )


def _origin_in_convex_hull(rays: list[Vec]) -> bool:
    """Exact test whether 0 is a convex combination of the given vectors.

    Checks all simplices per Caratheodory; coefficients come from signed
    cofactor determinants, so the test stays integer-exact.
    """
    n = len(rays[0])
    for a, b in itertools.combinations(rays, 2):
        parallel = (
            la.cross2(a, b) == 0 if n == 2 else all(c == 0 for c in la.cross(a, b))
        ) if n > 1 else True
        if parallel and any(a[i] * b[i] < 0 for i in range(n)):
            return True
    if n >= 2:
        for sub in itertools.combinations(rays, n + 1):
            cof = []
            for i in range(n + 1):
                cols = tuple(sub[j] for j in range(n + 1) if j != i)
                cof.append(((-1) ** i) * la.det(cols))
            if _same_sign_nontrivial(cof):
                return True
    if n == 3:
        # coplanar triples through the origin
        for a, b, c in itertools.combinations(rays, 3):
            w = la.cross(a, b)
            if all(x == 0 for x in w) or la.dot(w, c) != 0:
                continue
            coeffs = [
                la.dot(w, la.cross(b, c)),
                la.dot(w, la.cross(c, a)),
                la.dot(w, la.cross(a, b)),
            ]
            if _same_sign_nontrivial(coeffs):
                return True
    return False


def _cyclic_ray_order(rays: list[Vec]) -> list[Vec]:
    """Order the rays of a pointed full-dim 3D cone cyclically.

    Two rays are adjacent (span a 2-face) iff all other rays lie strictly on
    one side of a plane through them.
    """
    m = len(rays)
    adj: dict[int, list[int]] = {i: [] for i in range(m)}
    for i, j in itertools.combinations(range(m), 2):
        nrm = la.cross(rays[i], rays[j])
        if all(c == 0 for c in nrm):
            raise GeometryError("parallel ray generators")
        vals = [la.dot(nrm, rays[k]) for k in range(m) if k not in (i, j)]
        if all(v >= 0 for v in vals) or all(v <= 0 for v in vals):
            adj[i].append(j)
            adj[j].append(i)
    order = [0]
    prev = -1
    while len(order) < m:
        nxt = [k for k in adj[order[-1]] if k != prev]
        if not nxt:
            raise GeometryError("ray adjacency is not a single cycle")
        prev = order[-1]
        order.append(min(nxt))
    return [rays[i] for i in order]


def make_cone(apex: Vec, rays: list[Vec]) -> VertexCone:
    """Build a pointed cone of full dimension from ray generators."""
    rays = [la.primitive(r) for r in rays]
    seen: list[Vec] = []
    for r in rays:
        if r not in seen:
            seen.append(r)
    rays = seen
    n = len(apex)
    if len(rays) < n:
        raise GeometryError("cone is not full-dimensional")
    if _origin_in_convex_hull(rays):
        raise GeometryError("cone is not pointed")
    if n == 1:
        normals = (rays[0],)
    elif n == 2:
        if len(rays) != 2:
            # keep only the two extreme rays
            raise GeometryError("2D cone needs exactly two extreme rays")
        r1, r2 = rays
        s = la.cross2(r1, r2)
        if s == 0:
            raise GeometryError("cone is not full-dimensional")
        n1 = (-r1[1], r1[0]) if s > 0 else (r1[1], -r1[0])
        n2 = (r2[1], -r2[0]) if s > 0 else (-r2[1], r2[0])
        normals = (la.primitive(n1), la.primitive(n2))
    else:
        ordered = _cyclic_ray_order(rays) if len(rays) > 3 else rays
        rays = ordered
        nlist = []
        m = len(rays)
        if m == 3:
            pairs = [(0, 1), (1, 2), (2, 0)]
        else:
            pairs = [(i, (i + 1) % m) for i in range(m)]
        for i, j in pairs:
            nrm = la.cross(rays[i], rays[j])
            others = [r for k, r in enumerate(rays) if k not in (i, j)]
            sgn = 0
            for r in others:
                v = la.dot(nrm, r)
                if v:
                    sgn = 1 if v > 0 else -1
                    break
            if sgn == 0:
                raise GeometryError("degenerate cone facet")
            if sgn < 0:
                nrm = la.vneg(nrm)
            if any(la.dot(nrm, r) < 0 for r in rays):
                continue  # pair was not a 2-face (only for m == 3 safety)
            nlist.append(la.primitive(nrm))
        normals = tuple(dict.fromkeys(nlist))
    return VertexCone(tuple(apex), tuple(rays), tuple(normals))


def vertex_cone(p: LatticePolytope, v: Vec) -> VertexCone:
    """The cone of P at vertex v, generated by primitive edge directions."""
    _require_full_dim(p)
    if v not in p.vertices:
        raise GeometryError(f"{v} is not a vertex")
    rays = [la.primitive(la.vsub(w, v)) for w in p.vertex_neighbors(v)]
    return make_cone(v, sorted(rays))


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------


def is_simple(p: LatticePolytope) -> bool:
    """True iff exactly dim edges meet at every vertex."""
    _require_full_dim(p)
    return all(len(p.vertex_neighbors(v)) == p.dim for v in p.vertices)


def is_smooth(p: LatticePolytope) -> bool:
    """True iff P is simple and each vertex's primitive edge directions form
    a basis of the lattice (the polytope is nonsingular)."""
    _require_full_dim(p)
    if not is_simple(p):
        return False
    for v in p.vertices:
        rays = [la.primitive(la.vsub(w, v)) for w in p.vertex_neighbors(v)]
        if la.det(tuple(rays)) not in (1, -1):
            return False
    return True


def smooth_in_own_lattice(p: LatticePolytope) -> bool:
    """Smoothness of an embedded polytope w.r.t. its affine-hull lattice."""
    if p.dim == p.ambient:
        return is_smooth(p)
    small, _, _ = full_dim_coords(p)
    return is_smooth(small)


def normalized_area(p: LatticePolytope) -> int:
    """Twice the Euclidean area of a polygon, in its own lattice coords."""
    if p.dim != 2:
        raise GeometryError("normalized area is for 2-dimensional polytopes")
    poly = p if p.ambient == 2 else full_dim_coords(p)[0]
    # walk the boundary in facet order: facets of a polygon are its edges
    edges = {fv[0]: fv[1] for _, fv in poly.facets}
    start = next(iter(edges))
    ring = [start]
    while edges[ring[-1]] != start:
        ring.append(edges[ring[-1]])
    area2 = 0
    for i in range(len(ring)):
        area2 += la.cross2(ring[i], ring[(i + 1) % len(ring)])
    return abs(area2)


def is_basic_triangle(a: LatticePolytope) -> bool:
    """True iff A is a lattice triangle of normalized area 1 (equivalently,
    a triangle with exactly 3 lattice points)."""
    if a.dim != 2:
        raise GeometryError("input must be 2-dimensional")
    return len(a.vertices) == 3 and len(a.lattice_points()) == 3


# ---------------------------------------------------------------------------
# Hilbert bases and very ampleness
# ---------------------------------------------------------------------------


def _parallelepiped_points(rays: tuple[Vec, ...]) -> list[Vec]:
    """Lattice points of {sum t_i rays_i : 0 <= t_i < 1}, simplicial rays."""
    n = len(rays[0])
    mat = la.transpose(tuple(rays))  # columns are the rays
    d = la.det(mat)
    adj = la.adjugate(mat)
    sign = 1 if d > 0 else -1
    dd = abs(d)
    lo = tuple(min(0, sum(r[i] for r in rays)) for i in range(n))
    hi = tuple(max(0, sum(r[i] for r in rays)) for i in range(n))
    out = []
    for x in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(n))):
        t = la.mat_vec(adj, x)
        if all(0 <= sign * ti < dd for ti in t):
            out.append(tuple(x))
    return out


def hilbert_basis(c: VertexCone) -> frozenset[Vec]:
    """Minimal generating set of the semigroup (cone at apex) intersect M.

    Triangulates into simplicial subcones, enumerates each fundamental
    parallelepiped, then removes reducible elements.
    """
    n = c.ambient
    rays = list(c.rays)
    candidates: set[Vec] = set(rays)
    if len(rays) == n:
        subcones = [tuple(rays)]
    else:  # fan out from the first ray in stored (cyclic) order
        subcones = [
            (rays[0], rays[i], rays[i + 1]) for i in range(1, len(rays) - 1)
        ]
    for sub in subcones:
        for x in _parallelepiped_points(sub):
            if any(v != 0 for v in x):
                candidates.add(x)
    basis = set()
    for h in candidates:
        reducible = False
        for g in candidates:
            if g == h:
                continue
            diff = la.vsub(h, g)
            if any(v != 0 for v in diff) and c.contains(diff):
                reducible = True
                break
        if not reducible:
            basis.add(h)
    return frozenset(basis)


def is_very_ample(p: LatticePolytope) -> bool:
    """True iff at every vertex v the Hilbert basis of the vertex cone is
    contained in (P - v) intersect M."""
    _require_full_dim(p)
    for v in p.vertices:
        cone = vertex_cone(p, v)
        for h in hilbert_basis(cone):
            if not p.contains(la.vadd(v, h)):
                return False
    return True
