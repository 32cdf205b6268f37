"""Exact-arithmetic Dunkl operator calculus on finite reflection groups.

Multivariate polynomials over the rationals, Dunkl operators and the Dunkl
Laplacian for builtin or custom root systems, the Clifford algebra Cl(0, m)
with the Dunkl Dirac operator, Fischer decomposition into Dunkl-harmonic
layers, Clifford-Hermite polynomials built three independent ways, and exact
Gaussian moments for orthogonality checks.  Every identity is verified in
rational arithmetic; a check either holds exactly or fails with the exact
nonzero residual.
"""
from .clifford import (CliffordPolynomial, d_plus, d_plus_squared_scalar, dunkl_dirac,
                       monogenic_basis, vector_multiply)
from .errors import (DimensionMismatch, DunklError, InexactDivision, InvalidRootSystem,
                     MathPrecondition)
from .groups import (BUILTIN_FAMILIES, RootSystem, builtin_root_system, custom_root_system,
                     orbit_decomposition, reflection_matrix, root_system_from_json,
                     trivial_root_system)
from .hermite import (HarmonicBasis, HermiteRecord, RecursionCheck, ch_laguerre, ch_recursion,
                      ch_rodrigues, coefficient_recursions_check, eigenspace_checks,
                      fischer_decompose, fischer_frame, fischer_project, harmonic_basis,
                      harmonic_dimension_classical, laguerre_poly, mu_is_degenerate,
                      proportionality_constant, rosler_hermite, weighted_eigenfunction_check)
from .linalg import (OperatorMatrix, kernel_vectors, materialize_on_degree, matrix_rank,
                     rational_nullspace, reduced_row_echelon, solve_in_frame)
from .moments import (MomentValue, OrthogonalityReport, gamma_half_integer, inner_product,
                      orthogonality_report, weighted_moment)
from .operators import (DunklContext, WeightedFunction, conjugated_dunkl, conjugated_laplacian,
                        dunkl_derivative, dunkl_laplacian, euler_operator, heat_semigroup,
                        laplace_beltrami, multiply_by_norm_squared, sl2_e, sl2_f, sl2_h)
from .poly import (Polynomial, compose_linear, dim_homogeneous, divide_by_linear_form,
                   monomial_basis, parse_rational, rational_str)
from .suites import PROFILES, SUITE_NAMES, Profile, SuiteVerdict, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_FAMILIES", "CliffordPolynomial", "DimensionMismatch", "DunklContext",
    "DunklError", "HarmonicBasis", "HermiteRecord", "InexactDivision", "InvalidRootSystem",
    "MathPrecondition", "MomentValue", "OperatorMatrix", "OrthogonalityReport", "PROFILES",
    "Polynomial", "Profile", "RecursionCheck", "RootSystem", "SUITE_NAMES", "SuiteVerdict",
    "WeightedFunction", "builtin_root_system", "ch_laguerre", "ch_recursion", "ch_rodrigues",
    "coefficient_recursions_check", "compose_linear", "conjugated_dunkl",
    "conjugated_laplacian", "custom_root_system", "d_plus", "d_plus_squared_scalar",
    "dim_homogeneous", "divide_by_linear_form", "dunkl_derivative", "dunkl_dirac",
    "dunkl_laplacian", "eigenspace_checks", "euler_operator", "fischer_decompose",
    "fischer_frame", "fischer_project", "gamma_half_integer", "harmonic_basis",
    "harmonic_dimension_classical", "heat_semigroup", "inner_product", "kernel_vectors",
    "laguerre_poly", "laplace_beltrami", "materialize_on_degree", "matrix_rank",
    "monogenic_basis", "monomial_basis", "mu_is_degenerate", "multiply_by_norm_squared",
    "orbit_decomposition", "orthogonality_report", "parse_rational",
    "proportionality_constant", "rational_nullspace", "rational_str",
    "reduced_row_echelon", "reflection_matrix", "root_system_from_json", "rosler_hermite",
    "run_all", "run_suite", "sl2_e", "sl2_f", "sl2_h", "solve_in_frame",
    "trivial_root_system", "vector_multiply", "weighted_eigenfunction_check",
    "weighted_moment",
]
