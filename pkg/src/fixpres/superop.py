"""Linear maps on n x n matrices, represented as n^2 x n^2 matrices.

The vectorization convention is fixed package-wide to column stacking:
entry (i, j) of an n x n matrix lands at vec index j*n + i. Under that
convention a map A -> S @ A @ T has matrix T.T kron S, and the realign
permutation below sends exactly those maps to rank-one matrices, which
is what drives structure recovery.

Supported sizes are 1 <= n <= 16 so that the n^2 x n^2 representation
stays at desk scale for exact elimination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .linalg import (
    Matrix,
    SingularMatrix,
    SizeMismatch,
    commutation_matrix,
    inverse,
    kron,
    rank,
)
from .scalars import GaussianRational

MAX_SIDE = 16


class NotRankOne(ValueError):
    """rank_one_factor was given a matrix whose rank is not 1."""


def vec(a: Matrix) -> Matrix:
    """Column-stacking vectorization: entry (i, j) goes to index j*rows + i."""
    return Matrix(
        a.rows * a.cols,
        1,
        tuple(a[i, j] for j in range(a.cols) for i in range(a.rows)),
    )


def unvec(v: Matrix, rows: int, cols: int | None = None) -> Matrix:
    if cols is None:
        cols = rows
    if v.cols != 1 or v.rows != rows * cols:
        raise SizeMismatch(f"cannot unvec {v.rows}x{v.cols} into {rows}x{cols}")
    return Matrix(rows, cols, tuple(v[j * rows + i, 0] for i in range(rows) for j in range(cols)))


def _check_side(n: int) -> None:
    if not 1 <= n <= MAX_SIDE:
        raise ValueError(f"n must be in 1..{MAX_SIDE}, got {n}")


@dataclass(frozen=True, slots=True)
class SuperOp:
    """A linear map on n x n matrices, stored as its n^2 x n^2 matrix."""

    n: int
    matrix: Matrix

    def __post_init__(self):
        _check_side(self.n)
        side = self.n * self.n
        if self.matrix.rows != side or self.matrix.cols != side:
            raise SizeMismatch(
                f"superoperator for n={self.n} needs a {side}x{side} matrix, "
                f"got {self.matrix.rows}x{self.matrix.cols}"
            )

    def apply(self, a: Matrix) -> Matrix:
        if a.rows != self.n or a.cols != self.n:
            raise SizeMismatch(f"expected {self.n}x{self.n} input, got {a.rows}x{a.cols}")
        return unvec(self.matrix @ vec(a), self.n)

    def apply_to_unit(self, i: int, j: int) -> Matrix:
        """Image of the matrix unit E_ij; just a column of the matrix."""
        return unvec(self.matrix.column_at(j * self.n + i), self.n)

    def compose(self, inner: "SuperOp") -> "SuperOp":
        if self.n != inner.n:
            raise SizeMismatch(f"compose of n={self.n} with n={inner.n}")
        return SuperOp(self.n, self.matrix @ inner.matrix)


def identity_superop(n: int) -> SuperOp:
    _check_side(n)
    return SuperOp(n, Matrix.identity(n * n))


def transpose_superop(n: int) -> SuperOp:
    """The map A -> A.T, whose matrix is the commutation matrix."""
    _check_side(n)
    return SuperOp(n, commutation_matrix(n))


def superop_from_action(n: int, action: Callable[[Matrix], Matrix]) -> SuperOp:
    """Build the matrix of a linear action by evaluating it on matrix units."""
    _check_side(n)
    side = n * n
    columns = []
    for j in range(n):
        for i in range(n):
            image = action(Matrix.unit(n, i, j))
            columns.append(vec(image))
    entries = tuple(columns[c][r, 0] for r in range(side) for c in range(side))
    return SuperOp(n, Matrix(side, side, entries))


def _coerce_scale(scale) -> GaussianRational:
    if isinstance(scale, GaussianRational):
        return scale
    if isinstance(scale, (int, Fraction)):
        return GaussianRational(Fraction(scale))
    raise TypeError(f"cannot use {scale!r} as a scale factor")


def similarity_superop(s: Matrix, scale) -> SuperOp:
    """The map A -> scale * S @ A @ inv(S); raises SingularMatrix otherwise."""
    if not s.is_square:
        raise SingularMatrix(f"S must be square, got {s.rows}x{s.cols}")
    _check_side(s.rows)
    s_inv = inverse(s)
    return SuperOp(s.rows, _coerce_scale(scale) * kron(s_inv.transpose(), s))


def transpose_similarity_superop(s: Matrix, scale) -> SuperOp:
    """The map A -> scale * S @ A.T @ inv(S)."""
    if not s.is_square:
        raise SingularMatrix(f"S must be square, got {s.rows}x{s.cols}")
    _check_side(s.rows)
    s_inv = inverse(s)
    base = _coerce_scale(scale) * kron(s_inv.transpose(), s)
    return SuperOp(s.rows, precompose_transpose(base, s.rows))


def precompose_transpose(l: Matrix, n: int) -> Matrix:
    """l @ commutation_matrix(n), computed as a column permutation."""
    side = n * n
    if l.rows != side or l.cols != side:
        raise SizeMismatch(f"expected {side}x{side}, got {l.rows}x{l.cols}")
    partner = [(j % n) * n + j // n for j in range(side)]
    return Matrix(side, side, tuple(l[i, partner[j]] for i in range(side) for j in range(side)))


def realign(phi: SuperOp) -> Matrix:
    """Index shuffle under which maps A -> S @ A @ T become rank one.

    With L the superoperator matrix, the result M satisfies
    M[g*n + a, b*n + d] = L[b*n + a, d*n + g] for all 0-based digits
    a, b, g, d < n. When L = T.T kron S this gives exactly
    M = vec(S) @ vec(T).T.
    """
    n = phi.n
    side = n * n
    l = phi.matrix
    out = [None] * (side * side)
    for g in range(n):
        for a in range(n):
            row = g * n + a
            for b in range(n):
                for d in range(n):
                    out[row * side + b * n + d] = l[b * n + a, d * n + g]
    return Matrix(side, side, tuple(out))


def realign_inverse(m: Matrix, n: int) -> Matrix:
    """Inverse of the realign shuffle: recovers L from realign's output."""
    side = n * n
    if m.rows != side or m.cols != side:
        raise SizeMismatch(f"expected {side}x{side}, got {m.rows}x{m.cols}")
    out = [None] * (side * side)
    for g in range(n):
        for a in range(n):
            for b in range(n):
                for d in range(n):
                    out[(b * n + a) * side + d * n + g] = m[g * n + a, b * n + d]
    return Matrix(side, side, tuple(out))


def rank_one_factor(m: Matrix) -> tuple[Matrix, Matrix]:
    """Columns (u, v) with m = u @ v.T, for rank-one m.

    Normalized so the first nonzero entry of u is 1, which pins the
    scalar gauge and makes recovery deterministic.
    """
    r = rank(m)
    if r != 1:
        raise NotRankOne(f"rank is {r}")
    lead = next(idx for idx, val in enumerate(m.entries) if val)
    i0, j0 = divmod(lead, m.cols)
    anchor = m[i0, j0]
    u = Matrix(m.rows, 1, tuple(m[i, j0] / anchor for i in range(m.rows)))
    v = Matrix(m.cols, 1, tuple(m[i0, j] for j in range(m.cols)))
    return u, v


def is_bijective(phi: SuperOp) -> bool:
    """True exactly when the n^2 x n^2 matrix has full rank."""
    return rank(phi.matrix) == phi.n * phi.n
