"""Exact rational linear algebra for checking the invertible matrix theorem."""

from .core import (
    Matrix,
    Rational,
    ShapeError,
    Vector,
    mat_identity,
    mat_mul,
    mat_sub,
    mat_vec,
    parse_rational,
    rational_normalize,
)
from .generators import GenConfig, SplitMix64, random_invertible, random_matrix, random_vector, random_with_rank
from .rref import AddMultiple, RrefDecomposition, Scale, Swap, apply_trace, rank, rref
from .solver import (
    Infeasible,
    Infinite,
    Unique,
    combine_unit_solutions,
    nullspace_basis,
    right_inverse,
    right_inverse_detail,
    solve,
)
from .verifier import (
    Dependent,
    ImtReport,
    Independent,
    TwoSidedReport,
    imt_report,
    independence_certificate,
    two_sided_check,
)

__version__ = "0.1.0"

__all__ = [
    "Matrix",
    "Rational",
    "ShapeError",
    "Vector",
    "mat_identity",
    "mat_mul",
    "mat_sub",
    "mat_vec",
    "parse_rational",
    "rational_normalize",
    "GenConfig",
    "SplitMix64",
    "random_invertible",
    "random_matrix",
    "random_vector",
    "random_with_rank",
    "AddMultiple",
    "RrefDecomposition",
    "Scale",
    "Swap",
    "apply_trace",
    "rank",
    "rref",
    "Infeasible",
    "Infinite",
    "Unique",
    "combine_unit_solutions",
    "nullspace_basis",
    "right_inverse",
    "right_inverse_detail",
    "solve",
    "Dependent",
    "ImtReport",
    "Independent",
    "TwoSidedReport",
    "imt_report",
    "independence_certificate",
    "two_sided_check",
]
