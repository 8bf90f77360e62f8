"""Exact fixed-point subspaces and linear preserver verdicts.

Everything is computed over Gaussian rationals (complex numbers with
Fraction real and imaginary parts), so ranks, kernels, and verdicts are
exact — no tolerances anywhere.
"""

from .scalars import (
    GaussianRational,
    I_UNIT,
    ONE,
    ParseError,
    ZERO,
    ZeroDenominator,
    format_scalar,
    parse_scalar,
)
from .linalg import (
    AmbientMismatch,
    Matrix,
    NotSquare,
    SingularMatrix,
    SizeMismatch,
    Subspace,
    commutation_matrix,
    inverse,
    kernel_basis,
    kron,
    rank,
    rref,
    subspace_equal,
)
from .fixed_points import FixedReport, dim_fixed, fixed_report, fixed_space, kernel_via_fixed
from .rank_one import (
    DependentPair,
    ZeroFactor,
    are_orthogonal,
    completion_idempotent,
    is_idempotent,
    rank_one,
)
from .superop import (
    MAX_SIDE,
    NotRankOne,
    SuperOp,
    identity_superop,
    is_bijective,
    rank_one_factor,
    realign,
    realign_inverse,
    similarity_superop,
    superop_from_action,
    transpose_similarity_superop,
    transpose_superop,
    unvec,
    vec,
)
from .sampling import (
    derive_rng,
    random_invertible,
    random_matrix,
    random_nonzero_column,
    random_nonzero_row,
    random_orthogonal_idempotent_pair,
    random_rank_one_idempotent,
    random_scalar,
)
from .preserver import (
    Classification,
    NotRankOneIdempotent,
    PreserverReport,
    Verdict,
    check_dim_preserving,
    check_set_preserving,
    classify,
    dim_preserver_verdict,
    idempotent_shift_ratio,
    probe_suite,
    set_preserver_verdict,
    structured_probes,
)

__version__ = "0.1.0"

__all__ = [
    "AmbientMismatch",
    "Classification",
    "DependentPair",
    "FixedReport",
    "GaussianRational",
    "I_UNIT",
    "MAX_SIDE",
    "Matrix",
    "NotRankOne",
    "NotRankOneIdempotent",
    "NotSquare",
    "ONE",
    "ParseError",
    "PreserverReport",
    "SingularMatrix",
    "SizeMismatch",
    "Subspace",
    "SuperOp",
    "Verdict",
    "ZERO",
    "ZeroDenominator",
    "ZeroFactor",
    "are_orthogonal",
    "check_dim_preserving",
    "check_set_preserving",
    "classify",
    "commutation_matrix",
    "completion_idempotent",
    "derive_rng",
    "dim_fixed",
    "dim_preserver_verdict",
    "fixed_report",
    "fixed_space",
    "format_scalar",
    "identity_superop",
    "idempotent_shift_ratio",
    "inverse",
    "is_bijective",
    "is_idempotent",
    "kernel_basis",
    "kernel_via_fixed",
    "kron",
    "parse_scalar",
    "probe_suite",
    "random_invertible",
    "random_matrix",
    "random_nonzero_column",
    "random_nonzero_row",
    "random_orthogonal_idempotent_pair",
    "random_rank_one_idempotent",
    "random_scalar",
    "rank",
    "rank_one",
    "rank_one_factor",
    "realign",
    "realign_inverse",
    "rref",
    "set_preserver_verdict",
    "similarity_superop",
    "structured_probes",
    "subspace_equal",
    "superop_from_action",
    "transpose_similarity_superop",
    "transpose_superop",
    "unvec",
    "vec",
]
