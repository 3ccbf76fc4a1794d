"""Exact solver for flexible systems of linear inclusions.

Coefficients and right-hand sides are external numbers ``a + A``: a scalar
in Q(eps), with ``eps`` a positive infinitesimal, plus a neutrix ``A`` such
as ``o`` (the infinitesimals) or ``L`` (the limited numbers).
"""

from .errors import (
    AbsorberDeterminant,
    BadRank,
    DimensionMismatch,
    FlexError,
    InconsistentSystem,
    NotReduced,
    NotZeroless,
    ParseError,
    PreconditionFailed,
    RobustnessError,
    Singular,
    ValidationError,
)
from .extlinalg import (
    ExternalMatrix,
    ExternalVector,
    MatrixStats,
    ext_det,
    ext_minor,
    identity,
    inclusion_check,
    is_limited,
    is_nonsingular,
    is_reduced,
    mat_apply,
    representative,
)
from .extnum import (
    FULL,
    ZERO_N,
    ExternalScalar,
    Neutrix,
    canonicalize,
    ext,
    ext_add,
    ext_div,
    ext_inv,
    ext_leq,
    ext_lt,
    ext_member,
    ext_mul,
    ext_neg,
    ext_scale,
    ext_sub,
    ext_subset,
    is_absorber,
    is_exploder,
    is_neutricial,
    is_zeroless,
    ntx_div,
    ntx_max,
    ntx_min,
    ntx_mul,
    ntx_scale,
    ntx_sum,
    oslash,
    pound,
    relative_imprecision,
)
from .robustness import (
    EssentialReport,
    FeasibilityReport,
    RobustnessReport,
    essential_part_check,
    is_feasible_system,
    is_strict_perturbation,
    robustness_matrix,
    robustness_matrix_uniform,
)
from .scalar import EPS, OMEGA, ONE, ZERO, EpsScalar, classify, es_arith, es_compare, valuation
from .solutions import (
    Relation,
    SolutionSet,
    canonicalize_solution,
    linear_part,
    modular_dimension,
    solution_equiv,
    solution_membership,
)
from .solver import (
    EchelonSystem,
    FlexibleSystem,
    IntegratedSystem,
    consistency_check,
    feasibility_space,
    integrate,
    solve,
    solve_closed_form,
    system_from_rows,
    to_increasing_echelon,
)
from .textio import format_solution, format_system, parse_point, parse_scalar, parse_system

__version__ = "0.1.0"

__all__ = [
    "AbsorberDeterminant",
    "BadRank",
    "canonicalize",
    "canonicalize_solution",
    "classify",
    "consistency_check",
    "DimensionMismatch",
    "EchelonSystem",
    "EPS",
    "EpsScalar",
    "es_arith",
    "es_compare",
    "essential_part_check",
    "EssentialReport",
    "ext",
    "ext_add",
    "ext_det",
    "ext_div",
    "ext_inv",
    "ext_leq",
    "ext_lt",
    "ext_member",
    "ext_minor",
    "ext_mul",
    "ext_neg",
    "ext_scale",
    "ext_sub",
    "ext_subset",
    "ExternalMatrix",
    "ExternalScalar",
    "ExternalVector",
    "feasibility_space",
    "FeasibilityReport",
    "FlexError",
    "FlexibleSystem",
    "format_solution",
    "format_system",
    "FULL",
    "identity",
    "inclusion_check",
    "InconsistentSystem",
    "integrate",
    "IntegratedSystem",
    "is_absorber",
    "is_exploder",
    "is_feasible_system",
    "is_limited",
    "is_neutricial",
    "is_nonsingular",
    "is_reduced",
    "is_strict_perturbation",
    "is_zeroless",
    "linear_part",
    "mat_apply",
    "MatrixStats",
    "modular_dimension",
    "Neutrix",
    "NotReduced",
    "NotZeroless",
    "ntx_div",
    "ntx_max",
    "ntx_min",
    "ntx_mul",
    "ntx_scale",
    "ntx_sum",
    "OMEGA",
    "ONE",
    "oslash",
    "parse_point",
    "parse_scalar",
    "parse_system",
    "ParseError",
    "pound",
    "PreconditionFailed",
    "Relation",
    "relative_imprecision",
    "representative",
    "robustness_matrix",
    "robustness_matrix_uniform",
    "RobustnessError",
    "RobustnessReport",
    "Singular",
    "solution_equiv",
    "solution_membership",
    "SolutionSet",
    "solve",
    "solve_closed_form",
    "system_from_rows",
    "to_increasing_echelon",
    "ValidationError",
    "valuation",
    "ZERO",
    "ZERO_N",
]
