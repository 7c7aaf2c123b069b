"""Exact Euler/Bernoulli polynomials, modified Pascal matrices and their identities."""

from .egf import EgfSeries, cauchy_product, exp_xt, reciprocal, scale_t
from .exact_arith import binomial, floor_half, format_rational, parity_mask, parse_rational
from .identities import (
    IdentityId,
    IdentityReport,
    verify_all,
    verify_matrix_identity,
    verify_polynomial_identity,
)
from .matrices import (
    FamilyKind,
    MatrixFamily,
    SingularMatrixError,
    TriMatrix,
    apply_to_vector,
    build,
    invert,
    multiply,
)
from .poly import RatPoly
from .sequences import (
    PolyKind,
    SequenceKind,
    bernoulli_numbers,
    bernoulli_polys,
    central_bernoulli_sums,
    euler_numbers,
    euler_polys,
    substituted_polys,
)

__version__ = "0.1.0"

__all__ = [
    "EgfSeries",
    "cauchy_product",
    "exp_xt",
    "reciprocal",
    "scale_t",
    "binomial",
    "floor_half",
    "format_rational",
    "parity_mask",
    "parse_rational",
    "IdentityId",
    "IdentityReport",
    "verify_all",
    "verify_matrix_identity",
    "verify_polynomial_identity",
    "FamilyKind",
    "MatrixFamily",
    "SingularMatrixError",
    "TriMatrix",
    "apply_to_vector",
    "build",
    "invert",
    "multiply",
    "RatPoly",
    "PolyKind",
    "SequenceKind",
    "bernoulli_numbers",
    "bernoulli_polys",
    "central_bernoulli_sums",
    "euler_numbers",
    "euler_polys",
    "substituted_polys",
]
