"""Convex cubical tubes in S⁴: construction, extension and certification."""

from .cct import SymmetricCCT, build_symmetric, check_ideal, f_vector
from .convex import check_convex_position, check_local_convex_position
from .dual import build_polar_dual, check_reciprocal
from .extend import extend_to, standard_cct
from .projective import build_K, build_pcctp, verify_lambda
from .scalar import SQRT2, SQRT3, FieldElement, precision
from .variants import build_inscribed, build_rational

__all__ = [
    "FieldElement",
    "SQRT2",
    "SQRT3",
    "precision",
    "SymmetricCCT",
    "build_symmetric",
    "f_vector",
    "check_ideal",
    "extend_to",
    "standard_cct",
    "check_convex_position",
    "check_local_convex_position",
    "build_polar_dual",
    "check_reciprocal",
    "build_K",
    "verify_lambda",
    "build_pcctp",
    "build_rational",
    "build_inscribed",
]
