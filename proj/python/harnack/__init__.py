"""Numerical toolkit for Harnack-type matrix inequalities.

Thin re-export of the C++ extension module. Matrices are square complex
numpy arrays; structured reports are plain dicts matching the CLI's JSON
schemas.
"""

from harnack._core import (  # noqa: F401
    DEFAULT_MARGIN,
    DEFAULT_TOL,
    VIOLATION_THRESHOLD,
    ConvergenceFailure,
    DomainViolation,
    HarnackError,
    InvalidIndexSet,
    InvalidSpec,
    NotContractive,
    NotHermitian,
    NotUnitary,
    ParseError,
    SingularMatrix,
    __version__,
    adjoint,
    bound_report,
    cayley,
    cayley_bounds,
    cayley_difference_bounds,
    determinant,
    eigen_bound_rows,
    fan_hoffman_rows,
    general_eigenvalues,
    harnack_quotient,
    hermitian_eigenvalues,
    identity_residuals,
    imag_part,
    inverse,
    j_conjecture_slack,
    loewner_counterexample_check,
    lu_solve,
    multi_matrix_bound,
    naive_lower_bound_check,
    polar_abs,
    random_matrix,
    random_unitary,
    real_part,
    reference_checks,
    resolvent_spectrum_check,
    search,
    singular_values,
    special_case_check,
    sqrt_psd,
    tung_check,
    weak_bounds_check,
)
