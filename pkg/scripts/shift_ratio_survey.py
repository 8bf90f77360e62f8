#!/usr/bin/env python3
"""Survey the idempotent shift ratio over map families.

For a rank-one idempotent P and a matrix A, the ratio eta satisfies
phi(A) + P == eta * (A + P) when the two sides are exactly proportional.
For the identity map eta is 1 everywhere. This survey measures how often
the ratio even exists for other families, and whether it stays constant
in A for a fixed P (it provably does when phi is the identity; nothing
is claimed elsewhere).

Usage: python3 scripts/shift_ratio_survey.py --seed 0 --pairs 40
"""

import argparse
import sys

from fixpres import (
    Matrix,
    derive_rng,
    idempotent_shift_ratio,
    identity_superop,
    random_invertible,
    random_matrix,
    random_rank_one_idempotent,
    similarity_superop,
    transpose_superop,
)


def families(n: int, seed: int):
    rng = derive_rng(seed, "family")
    yield "identity", identity_superop(n)
    yield "doubling", similarity_superop(Matrix.identity(n), 2)
    yield "similarity", similarity_superop(random_invertible(rng, n), 1)
    yield "neg-similarity", similarity_superop(random_invertible(rng, n), -1)
    yield "transpose", transpose_superop(n)


def survey(n: int, pairs: int, per_p: int, seed: int) -> None:
    for name, phi in families(n, seed):
        exists = 0
        constant_in_a = 0
        total_p = 0
        for k in range(pairs):
            rng = derive_rng(seed, "survey", name, k)
            p, _, _ = random_rank_one_idempotent(rng, n)
            values = set()
            hit = 0
            for _ in range(per_p):
                a = random_matrix(rng, n, n)
                eta = idempotent_shift_ratio(phi, p, a)
                if eta is not None:
                    hit += 1
                    values.add(eta)
            exists += hit
            total_p += 1
            if hit == per_p and len(values) == 1:
                constant_in_a += 1
        rate = exists / (pairs * per_p)
        print(f"{name:16s} ratio exists {exists:4d}/{pairs * per_p}"
              f"  ({rate:.0%});  constant-in-A for {constant_in_a}/{total_p} fixed P")


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=3)
    parser.add_argument("--pairs", type=int, default=40, help="P draws per family")
    parser.add_argument("--per-p", type=int, default=10, help="A draws per P")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    survey(args.n, args.pairs, args.per_p, args.seed)
    return 0


if __name__ == "__main__":
    sys.exit(main())
