"""Radon-Hurwitz bounds for constant-rank spaces of symmetric and hermitian matrices."""

from .classifier import BoundQuery, BoundReport, classify
from .exact_linalg import ExactMatrix, GaussianRational, exact_rank, signature
from .families import AnticommutingFamily, build_family, evaluate
from .rh_core import factor_dyadic, rho, rho_c, sigma
from .spaces import MatrixSpace, build_space, dimension_formula
from .verifier import check_certificate, verify_space

__all__ = [
    "AnticommutingFamily",
    "BoundQuery",
    "BoundReport",
    "ExactMatrix",
    "GaussianRational",
    "MatrixSpace",
    "build_family",
    "build_space",
    "check_certificate",
    "classify",
    "dimension_formula",
    "evaluate",
    "exact_rank",
    "factor_dyadic",
    "rho",
    "rho_c",
    "sigma",
    "signature",
    "verify_space",
]
