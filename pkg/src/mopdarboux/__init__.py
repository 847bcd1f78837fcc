"""Exact calculus for matrix orthogonal polynomials, their differential
operator algebras, and Darboux transformations between matrix weights."""

from .algebra import CMat, GaussianRational, Mat, Poly, RatFun, nullspace
from .darboux import DarbouxCertificate, companion_operator, conjugate, mapped_sequence, verify_strong
from .diffop import MatDiffOp, compose, degree_preserving_test, formal_adjoint
from .dwalgebra import eigenvalue_poly, membership_test, operator_equal_by_separation, solve_bounded_order
from .mop import MOPTable, general_recurrence, monic_sequence, recurrence_coeffs
from .weights import Kernel, MatrixWeight, boundary_check, formal_symmetry_test, inner_product, w_adjoint

__version__ = "0.1.0"

__all__ = [
    "CMat",
    "GaussianRational",
    "Mat",
    "Poly",
    "RatFun",
    "nullspace",
    "DarbouxCertificate",
    "companion_operator",
    "conjugate",
    "mapped_sequence",
    "verify_strong",
    "MatDiffOp",
    "compose",
    "degree_preserving_test",
    "formal_adjoint",
    "eigenvalue_poly",
    "membership_test",
    "operator_equal_by_separation",
    "solve_bounded_order",
    "MOPTable",
    "general_recurrence",
    "monic_sequence",
    "recurrence_coeffs",
    "Kernel",
    "MatrixWeight",
    "boundary_check",
    "formal_symmetry_test",
    "inner_product",
    "w_adjoint",
]
