"""Fixed-point subspaces of square matrices.

The fixed-point space of A is the kernel of A - I. Its dimension is the
geometric multiplicity of eigenvalue 1 and is computed exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, NotSquare, Subspace, kernel_basis, rank


def _require_square(a: Matrix) -> None:
    if not a.is_square:
        raise NotSquare(f"{a.rows}x{a.cols}")


@dataclass(frozen=True, slots=True)
class FixedReport:
    """Fixed-space dimension, canonical basis, and the rank of A itself."""

    dim: int
    space: Subspace
    rank_of_a: int


def fixed_space(a: Matrix) -> Subspace:
    """All vectors v with a @ v = v, as a canonical subspace."""
    _require_square(a)
    return kernel_basis(a - Matrix.identity(a.rows))


def dim_fixed(a: Matrix) -> int:
    """Dimension of the fixed-point space: n - rank(A - I)."""
    _require_square(a)
    return a.rows - rank(a - Matrix.identity(a.rows))


def kernel_via_fixed(a: Matrix) -> Subspace:
    """ker(A) computed as the fixed-point space of A + I."""
    _require_square(a)
    return fixed_space(a + Matrix.identity(a.rows))


def fixed_report(a: Matrix) -> FixedReport:
    """Fixed-space summary; cross-checks the two dimension computations."""
    space = fixed_space(a)
    dim = dim_fixed(a)
    if dim != space.dim:
        raise AssertionError(f"dimension cross-check failed: {dim} vs {space.dim}")
    return FixedReport(dim=dim, space=space, rank_of_a=rank(a))
