"""Superoperators on M_n: vectorization, realignment, rank-one recovery.

The realignment permutation is pinned down by its defining property: maps
of the form A -> S A T must realign to the rank-one matrix vec(S) vec(T)^T.
The brute-force oracle below enumerates that identity directly instead of
trusting any index formula.
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fixpres import (
    Matrix,
    NotRankOne,
    SizeMismatch,
    SuperOp,
    derive_rng,
    identity_superop,
    inverse,
    is_bijective,
    kron,
    random_invertible,
    random_matrix,
    rank,
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


# ---------------------------------------------------------------------------
# vec / unvec

def test_vec_is_column_stacking():
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert [str(vec(a)[k, 0]) for k in range(4)] == ["1", "3", "2", "4"]


@given(st.integers(0, 50))
def test_unvec_inverts_vec(seed):
    rng = derive_rng(seed, "vec")
    a = random_matrix(rng, 3, 3)
    assert unvec(vec(a), 3) == a


def test_unvec_rejects_wrong_length():
    with pytest.raises(SizeMismatch):
        unvec(Matrix.column([1, 2, 3]), 2)


# ---------------------------------------------------------------------------
# building superoperators

def test_identity_superop_fixes_all():
    phi = identity_superop(2)
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert phi.apply(a) == a


def test_transpose_superop_transposes():
    phi = transpose_superop(3)
    a = Matrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
    assert phi.apply(a) == a.transpose()


def test_superop_side_validation():
    with pytest.raises(ValueError):
        SuperOp(2, Matrix.zeros(3, 3))


def test_apply_rejects_wrong_side():
    phi = identity_superop(2)
    with pytest.raises(SizeMismatch):
        phi.apply(Matrix.zeros(3, 3))


def test_superop_from_action_matches_action():
    s = Matrix.from_rows([[1, 1], [0, 1]])
    t = Matrix.from_rows([[2, 0], [1, 1]])
    phi = superop_from_action(2, lambda a: s @ a @ t)
    probe = Matrix.from_rows([[5, -1], [0, 3]])
    assert phi.apply(probe) == s @ probe @ t


def test_apply_to_unit_reads_columns():
    s = Matrix.from_rows([[1, 2], [3, 4]])
    phi = similarity_superop(s, 1)
    for i in range(2):
        for j in range(2):
            assert phi.apply_to_unit(i, j) == phi.apply(Matrix.unit(2, i, j))


def test_similarity_superop_action():
    s = Matrix.from_rows([[1, 1, 0], [0, 1, 0], [2, 0, 1]])
    phi = similarity_superop(s, 1)
    a = Matrix.from_rows([[1, 0, 2], [0, 3, 0], [1, 1, 1]])
    assert phi.apply(a) == s @ a @ inverse(s)


def test_similarity_superop_is_kron_of_inverse_transpose_and_s():
    s = Matrix.from_rows([[1, 1], [1, 2]])
    phi = similarity_superop(s, 1)
    assert phi.matrix == kron(inverse(s).transpose(), s)


def test_transpose_similarity_action():
    s = Matrix.from_rows([[1, 1], [0, 1]])
    phi = transpose_similarity_superop(s, 1)
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert phi.apply(a) == s @ a.transpose() @ inverse(s)


def test_compose_is_function_composition():
    s = Matrix.from_rows([[1, 1], [0, 1]])
    phi = similarity_superop(s, 1)
    tau = transpose_superop(2)
    a = Matrix.from_rows([[1, 2], [3, 4]])
    assert phi.compose(tau).apply(a) == phi.apply(tau.apply(a))


def test_bijectivity():
    assert is_bijective(identity_superop(3))
    rank_one_action = superop_from_action(
        2, lambda a: a[0, 0] * Matrix.unit(2, 0, 0)
    )
    assert not is_bijective(rank_one_action)


# ---------------------------------------------------------------------------
# realignment: defining property, brute-force oracle

def _sandwich_superop(s: Matrix, t: Matrix) -> SuperOp:
    n = s.rows
    return superop_from_action(n, lambda a: s @ a @ t)


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("seed", range(10))
def test_realign_oracle_sandwich_maps(n, seed):
    """realign(A -> S A T) must equal vec(S) vec(T)^T, entry by entry."""
    rng = derive_rng(seed, "oracle", n)
    s = random_matrix(rng, n, n)
    t = random_matrix(rng, n, n)
    m = realign(_sandwich_superop(s, t))
    expected = vec(s) @ vec(t).transpose()
    assert m == expected


@given(st.integers(0, 50))
def test_realign_of_similarity_is_rank_one(seed):
    rng = derive_rng(seed, "sim-rank")
    s = random_invertible(rng, 3)
    assert rank(realign(similarity_superop(s, 1))) == 1


def test_realign_of_identity_is_rank_one():
    # identity is A -> I A I, so it realigns to vec(I) vec(I)^T
    m = realign(identity_superop(3))
    assert rank(m) == 1
    assert m == vec(Matrix.identity(3)) @ vec(Matrix.identity(3)).transpose()


def test_realign_of_transpose_map_has_full_rank():
    # the transpose map is as far from a sandwich map as possible
    assert rank(realign(transpose_superop(3))) == 9


@given(st.integers(0, 50))
def test_realign_round_trip(seed):
    rng = derive_rng(seed, "round")
    l = random_matrix(rng, 9, 9)
    phi = SuperOp(3, l)
    assert realign_inverse(realign(phi), 3) == l


def test_realign_is_not_an_involution_but_has_order_three():
    """The index permutation has order 3; applying it twice is the inverse."""
    rng = derive_rng(99, "order3")
    l = random_matrix(rng, 4, 4)
    once = realign(SuperOp(2, l))
    twice = realign(SuperOp(2, once))
    thrice = realign(SuperOp(2, twice))
    assert thrice == l
    assert twice == realign_inverse(l, 2)


# ---------------------------------------------------------------------------
# rank-one factoring

def test_rank_one_factor_recovers_gauge_normalized_pair():
    u0 = Matrix.column([2, 4])
    v0 = Matrix.row_vector([3, 5]).transpose()
    m = u0 @ v0.transpose()
    u, v = rank_one_factor(m)
    # first nonzero of u is scaled to one; the product is unchanged
    assert str(u[0, 0]) == "1"
    assert u @ v.transpose() == m


def test_rank_one_factor_rejects_other_ranks():
    with pytest.raises(NotRankOne):
        rank_one_factor(Matrix.zeros(2, 2))
    with pytest.raises(NotRankOne):
        rank_one_factor(Matrix.identity(2))


@given(st.integers(0, 50))
def test_rank_one_factor_round_trip(seed):
    rng = derive_rng(seed, "factor")
    u0 = Matrix.column([rng.randint(-5, 5) for _ in range(4)])
    v0 = Matrix.column([rng.randint(-5, 5) for _ in range(4)])
    if u0.is_zero or v0.is_zero:
        return
    m = u0 @ v0.transpose()
    u, v = rank_one_factor(m)
    assert u @ v.transpose() == m
