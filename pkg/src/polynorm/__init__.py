"""Lattice polytope normality: oracles, covering certificates, generators.

The package decides normality and very-ampleness of lattice polytopes of
dimension up to 3 with exact integer arithmetic, builds constructive
normality certificates for upright prisms over smooth polygons, and ships
seeded generators plus a CLI for batch checks.
"""

from .classify import is_simple, is_smooth, is_very_ample
from .cover import CoverError, ParallelogramCover, basic_triangulation, parallelogram_cover
from .fibered import (
    FiberedPrism,
    certify_fibered,
    detect_fibered,
    fibered_pair_decompose,
)
from .generators import (
    gen_bruns_gubeladze,
    gen_random_fibered,
    gen_random_smooth_polygon,
    gen_reeve,
)
from .io import PolytopeDocument, dump_polytope, load_polytope
from .lattice import (
    AffineUnimodularMap,
    CoordinateOverflowError,
    GeometryError,
    HalfSpace,
    LatticePolytope,
    apply_map,
    convex_hull,
    dilate,
    lattice_points,
    minkowski_sum,
    segment,
)
from .normality import (
    NonNormalityWitness,
    NormalityResult,
    PairDecomposition,
    decompose_point,
    is_normal,
    pair_check,
    verify_witness,
)
from .prisms import (
    CertificateError,
    CertificatePiece,
    NormalityCertificate,
    certify_prism,
    certify_QA,
)

__all__ = [
    "AffineUnimodularMap",
    "CertificateError",
    "CertificatePiece",
    "CoordinateOverflowError",
    "CoverError",
    "FiberedPrism",
    "GeometryError",
    "HalfSpace",
    "LatticePolytope",
    "NonNormalityWitness",
    "NormalityCertificate",
    "NormalityResult",
    "PairDecomposition",
    "ParallelogramCover",
    "PolytopeDocument",
    "apply_map",
    "basic_triangulation",
    "certify_QA",
    "certify_fibered",
    "certify_prism",
    "convex_hull",
    "decompose_point",
    "detect_fibered",
    "dilate",
    "dump_polytope",
    "fibered_pair_decompose",
    "gen_bruns_gubeladze",
    "gen_random_fibered",
    "gen_random_smooth_polygon",
    "gen_reeve",
    "is_normal",
    "is_simple",
    "is_smooth",
    "is_very_ample",
    "lattice_points",
    "load_polytope",
    "minkowski_sum",
    "pair_check",
    "parallelogram_cover",
    "segment",
    "verify_witness",
]
