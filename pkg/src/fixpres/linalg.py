"""Exact dense linear algebra over Gaussian-rational scalars.

All values are immutable and every operation is pure. Rank and kernel
decisions are bit-exact: there is no tolerance anywhere in this module.

Subspaces are stored in a unique canonical form (the transpose of the
stored basis is in reduced row echelon form), so subspace equality is a
plain entrywise comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalars import GaussianRational, ONE, ZERO


class NotSquare(ValueError):
    """A square matrix was required."""


class SingularMatrix(ValueError):
    """Inversion was requested for a matrix without full rank."""


class SizeMismatch(ValueError):
    """Operand shapes are incompatible."""


class AmbientMismatch(ValueError):
    """Subspaces live in different ambient spaces."""


def _as_scalar(value) -> GaussianRational:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(Fraction(value))
    raise TypeError(f"cannot use {value!r} as a matrix entry")


@dataclass(frozen=True, slots=True)
class Matrix:
    """Dense rows x cols matrix, entries stored row-major.

    Zero rows or columns are allowed; the empty basis of the zero
    subspace is an n x 0 matrix.
    """

    rows: int
    cols: int
    entries: tuple[GaussianRational, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        n_rows = len(rows)
        n_cols = len(rows[0]) if n_rows else 0
        flat = []
        for row in rows:
            if len(row) != n_cols:
                raise ValueError("ragged rows")
            flat.extend(_as_scalar(v) for v in row)
        return cls(n_rows, n_cols, tuple(flat))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        vals = [_as_scalar(v) for v in values]
        n = len(vals)
        return cls(n, n, tuple(vals[i] if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int) -> "Matrix":
        """Matrix unit with a single 1 at (i, j)."""
        entries = [ZERO] * (n * n)
        entries[i * n + j] = ONE
        return cls(n, n, tuple(entries))

    @classmethod
    def column(cls, values: Sequence) -> "Matrix":
        vals = tuple(_as_scalar(v) for v in values)
        return cls(len(vals), 1, vals)

    @classmethod
    def row_vector(cls, values: Sequence) -> "Matrix":
        vals = tuple(_as_scalar(v) for v in values)
        return cls(1, len(vals), vals)

    def __getitem__(self, key: tuple[int, int]) -> GaussianRational:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(key)
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[GaussianRational]]:
        c = self.cols
        return [list(self.entries[i * c : (i + 1) * c]) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def __add__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatch(f"{self.rows}x{self.cols} + {other.rows}x{other.cols}")
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise SizeMismatch(f"{self.rows}x{self.cols} - {other.rows}x{other.cols}")
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def __mul__(self, scalar) -> "Matrix":
        try:
            s = _as_scalar(scalar)
        except TypeError:
            return NotImplemented
        return Matrix(self.rows, self.cols, tuple(s * a for a in self.entries))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise SizeMismatch(f"{self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.entries, other.entries
        n, k, m = self.rows, self.cols, other.cols
        out = []
        for i in range(n):
            base = i * k
            for j in range(m):
                acc = ZERO
                for t in range(k):
                    left = a[base + t]
                    if left:
                        acc = acc + left * b[t * m + j]
                out.append(acc)
        return Matrix(n, m, tuple(out))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise SizeMismatch(f"hstack of {self.rows} and {other.rows} rows")
        rows = []
        for i in range(self.rows):
            rows.append(
                self.entries[i * self.cols : (i + 1) * self.cols]
                + other.entries[i * other.cols : (i + 1) * other.cols]
            )
        return Matrix(self.rows, self.cols + other.cols, tuple(v for row in rows for v in row))

    def column_at(self, j: int) -> "Matrix":
        return Matrix(self.rows, 1, tuple(self.entries[i * self.cols + j] for i in range(self.rows)))

    def __str__(self) -> str:
        body = "; ".join(
            " ".join(str(v) for v in self.entries[i * self.cols : (i + 1) * self.cols])
            for i in range(self.rows)
        )
        return f"[{body}]"


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form of m with rank and pivot columns.

    The RREF is unique, which is what makes canonical subspace bases and
    bitwise subspace equality possible downstream.
    """
    data = m.to_rows()
    n_rows, n_cols = m.rows, m.cols
    pivots: list[int] = []
    pivot_row = 0
    for col in range(n_cols):
        if pivot_row == n_rows:
            break
        hit = None
        for r in range(pivot_row, n_rows):
            if data[r][col]:
                hit = r
                break
        if hit is None:
            continue
        data[pivot_row], data[hit] = data[hit], data[pivot_row]
        lead = data[pivot_row][col]
        if lead != ONE:
            inv = ONE / lead
            row = data[pivot_row]
            for c in range(col, n_cols):
                if row[c]:
                    row[c] = row[c] * inv
        for r in range(n_rows):
            if r == pivot_row:
                continue
            factor = data[r][col]
            if not factor:
                continue
            src = data[pivot_row]
            dst = data[r]
            for c in range(col, n_cols):
                if src[c]:
                    dst[c] = dst[c] - factor * src[c]
        pivots.append(col)
        pivot_row += 1
    reduced = Matrix(n_rows, n_cols, tuple(v for row in data for v in row))
    return reduced, len(pivots), tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


@dataclass(frozen=True, slots=True)
class Subspace:
    """A linear subspace of column vectors, in canonical form.

    basis is ambient_dim x dim; its transpose is in RREF with no zero
    rows. Two Subspace values are equal exactly when they contain the
    same vectors.
    """

    ambient_dim: int
    basis: Matrix

    def __post_init__(self):
        if self.basis.rows != self.ambient_dim:
            raise ValueError("basis rows must match ambient dimension")

    @property
    def dim(self) -> int:
        return self.basis.cols

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, Matrix(n, 0, ()))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, Matrix.identity(n))

    @classmethod
    def spanned_by_columns(cls, m: Matrix) -> "Subspace":
        """Canonical subspace spanned by the columns of m."""
        reduced, r, _ = rref(m.transpose())
        rows = reduced.to_rows()[:r]
        basis_t = Matrix(r, m.rows, tuple(v for row in rows for v in row))
        return cls(m.rows, basis_t.transpose())

    def contains(self, v: Matrix) -> bool:
        if v.rows != self.ambient_dim or v.cols != 1:
            raise AmbientMismatch(f"vector of size {v.rows} in ambient {self.ambient_dim}")
        if self.dim == 0:
            return v.is_zero
        return rank(self.basis.hstack(v)) == self.dim


def subspace_equal(u: Subspace, v: Subspace) -> bool:
    """Exact set equality of subspaces via their canonical bases."""
    if u.ambient_dim != v.ambient_dim:
        raise AmbientMismatch(f"{u.ambient_dim} vs {v.ambient_dim}")
    return u.basis == v.basis


def kernel_basis(m: Matrix) -> Subspace:
    """Canonical basis of the null space of m."""
    reduced, r, pivots = rref(m)
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    if not free_cols:
        return Subspace.zero(m.cols)
    vectors = []
    for free in free_cols:
        entries = [ZERO] * m.cols
        entries[free] = ONE
        for row_idx, piv in enumerate(pivots):
            entries[piv] = -reduced[row_idx, free]
        vectors.append(entries)
    spanning = Matrix(len(vectors), m.cols, tuple(v for vec_ in vectors for v in vec_)).transpose()
    return Subspace.spanned_by_columns(spanning)


def inverse(m: Matrix) -> Matrix:
    """Exact inverse; raises SingularMatrix when rank is deficient."""
    if not m.is_square:
        raise NotSquare(f"{m.rows}x{m.cols}")
    n = m.rows
    reduced, _, pivots = rref(m.hstack(Matrix.identity(n)))
    left_rank = sum(1 for p in pivots if p < n)
    if left_rank < n:
        raise SingularMatrix(f"rank {left_rank} < {n}")
    return Matrix(n, n, tuple(reduced[i, n + j] for i in range(n) for j in range(n)))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; block (i, j) equals a[i, j] * b."""
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    out = [ZERO] * (rows * cols)
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            coeff = a[i1, j1]
            if not coeff:
                continue
            for i2 in range(b.rows):
                base = (i1 * b.rows + i2) * cols + j1 * b.cols
                for j2 in range(b.cols):
                    val = b[i2, j2]
                    if val:
                        out[base + j2] = coeff * val
    return Matrix(rows, cols, tuple(out))


def commutation_matrix(n: int) -> Matrix:
    """Permutation K with K @ vec(A) = vec(A.T), column-stacking.

    vec places entry (i, j) at index j*n + i; K is symmetric and its own
    inverse.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    side = n * n
    out = [ZERO] * (side * side)
    for r in range(n):
        for c in range(n):
            out[(c * n + r) * side + (r * n + c)] = ONE
    return Matrix(side, side, tuple(out))
