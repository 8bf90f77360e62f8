"""Deterministic seeded generation of exact random matrices.

A single 64-bit seed plus a label path is hashed into a child generator,
so independent streams can be derived per probe, per trial, or per test
without any shared state. Entries follow the fuzzing distribution used
throughout the package: numerators in [-9, 9], denominators in {1, 2, 3},
for both the real and imaginary parts.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from .linalg import Matrix, inverse, rank
from .scalars import GaussianRational

DENOMINATORS = (1, 2, 3)


def derive_rng(seed: int, *labels: object) -> random.Random:
    """Child generator for the given seed and label path, platform-stable."""
    key = "|".join([str(seed), *(str(v) for v in labels)]).encode()
    digest = hashlib.blake2b(key, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def random_scalar(rng: random.Random) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-9, 9), rng.choice(DENOMINATORS)),
        Fraction(rng.randint(-9, 9), rng.choice(DENOMINATORS)),
    )


def random_matrix(rng: random.Random, rows: int, cols: int) -> Matrix:
    return Matrix(rows, cols, tuple(random_scalar(rng) for _ in range(rows * cols)))


def random_nonzero_column(rng: random.Random, n: int) -> Matrix:
    while True:
        v = random_matrix(rng, n, 1)
        if not v.is_zero:
            return v


def random_nonzero_row(rng: random.Random, n: int) -> Matrix:
    while True:
        f = random_matrix(rng, 1, n)
        if not f.is_zero:
            return f


def random_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        m = random_matrix(rng, n, n)
        if rank(m) == n:
            return m


def random_rank_one_idempotent(rng: random.Random, n: int) -> tuple[Matrix, Matrix, Matrix]:
    """A rank-one idempotent p = x @ f with f(x) = 1; returns (p, x, f)."""
    while True:
        x = random_nonzero_column(rng, n)
        f = random_nonzero_row(rng, n)
        fx = (f @ x)[0, 0]
        if fx:
            f = f * (1 / fx)
            return x @ f, x, f


def random_orthogonal_idempotent_pair(rng: random.Random, n: int) -> tuple[Matrix, Matrix]:
    """Orthogonal rank-one idempotents, built by conjugating two diagonal units."""
    b = random_invertible(rng, n)
    b_inv = inverse(b)
    p = b @ Matrix.unit(n, 0, 0) @ b_inv
    q = b @ Matrix.unit(n, 1, 1) @ b_inv
    return p, q
