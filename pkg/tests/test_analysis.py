import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from covrad.analysis import (
    EVEN_ACCUMULATED,
    ODD_COMPOSITE,
    ODD_PRIME,
    ORACLE,
    code_weight_distribution,
    coset_leader_distribution_transform,
    covering_radius,
    covering_radius_transform,
    representative_weights,
    weight_distribution,
)
from covrad.code import (
    CharacteristicVector,
    LinearCode,
    char_function,
    characteristic_vector,
    generator_from_parity,
    oracle_coset_profile,
    oracle_weight_distribution,
)
from covrad.errors import BudgetError, IterationCapError
from covrad.gf import gf
from covrad.projective import build_table

import oracles


@pytest.mark.parametrize("q,k", [(3, 2), (2, 3), (4, 2), (5, 3)])
def test_simplex_weight_distribution(q, k):
    t = build_table(gf(q), k)
    wd = weight_distribution(CharacteristicVector(t, np.ones(t.theta, dtype=np.int64)))
    assert wd.nonzero() == {0: 1, q ** (k - 1): q**k - 1}


def test_weight_distribution_paths_agree(rng):
    F = gf(3)
    G = oracles.random_full_rank(F, 3, 6, rng)
    cv = characteristic_vector(LinearCode.from_generator(F, G))
    assert representative_weights(cv, "reduced") == representative_weights(cv, "direct")
    assert list(weight_distribution(cv).A) == oracles.enumerate_weights(F, G)


def test_weight_distribution_rank_deficient_chi():
    t = build_table(gf(3), 2)
    # all columns proportional to one point: the code has dimension 1, not 2
    with pytest.raises(ValueError, match="rank deficient"):
        weight_distribution(CharacteristicVector(t, np.array([3, 0, 0, 0])))


@given(seed=st.integers(0, 2**32 - 1), q=st.sampled_from([2, 3, 4, 5, 8, 9]))
def test_weight_distribution_matches_oracle(seed, q):
    rng = np.random.default_rng(seed)
    F = gf(q)
    k = int(rng.integers(1, 4))
    n = int(rng.integers(k, 9))
    G = oracles.random_full_rank(F, k, n, rng)
    code = LinearCode.from_generator(F, G)
    wd = code_weight_distribution(code)
    assert list(wd.A) == oracle_weight_distribution(code)
    assert wd.A[0] == 1 and sum(wd.A) == q**k


def test_ternary63_radius(ternary63_code):
    rep = covering_radius_transform(ternary63_code, keep_spectra=True)
    assert rep.covering_radius == 3
    assert rep.method == ODD_PRIME
    assert rep.spectra[2].point_list() == [27, 54, 54, 27, 54, 0, 0, 54, 54, 0, 0, 54, 27]
    assert rep.spectra[3].point_list() == [405, 162, 162, 405, 162, 162, 162, 162, 162, 162, 162, 162, 405]
    assert rep.per_j_nonzero == {1: 3, 2: 9, 3: 13}
    assert rep.witness_counts == [v // 27 for v in rep.spectra[3].point_list()]


def test_witness_counts_are_tuple_counts(ternary63_code):
    # S_j(y) / q^r counts ordered j-tuples from the support of h summing to y
    F = gf(3)
    H = np.array(ternary63_code.parity)
    support = sorted({tuple(int(x) for x in F.mul(c, H[:, i])) for c in (1, 2) for i in range(H.shape[1])})
    rep = covering_radius_transform(ternary63_code)
    t = build_table(F, 3)
    for u, count in enumerate(rep.witness_counts):
        target = tuple(int(x) for x in t.points[u])
        direct = sum(1 for tup in itertools.product(support, repeat=3) if _vsum(F, tup) == target)
        assert count == direct


def _vsum(F, vecs):
    acc = (0,) * len(vecs[0])
    for v in vecs:
        acc = tuple(int(x) for x in oracles.add_vec(F, acc, v))
    return acc


def test_hamming_radius(hamming74):
    rep = covering_radius_transform(hamming74)
    assert rep.covering_radius == 1
    assert rep.method == EVEN_ACCUMULATED
    assert covering_radius(hamming74, method="oracle").covering_radius == 1


def test_method_tags():
    rng = np.random.default_rng(1)
    for q, tag in [(3, ODD_PRIME), (9, ODD_COMPOSITE), (4, EVEN_ACCUMULATED), (2, EVEN_ACCUMULATED)]:
        F = gf(q)
        code = LinearCode.from_parity(F, oracles.random_full_rank(F, 2, 5, rng))
        assert covering_radius(code).method == tag


@pytest.mark.parametrize("q", [4, 8])
def test_even_composite_random_codes(q, rng):
    F = gf(q)
    for _ in range(6):
        H = oracles.random_full_rank(F, 3, 6, rng)
        code = LinearCode.from_parity(F, H)
        assert covering_radius_transform(code).covering_radius == oracles.smallest_cover(F, H)


def test_coset_leaders_ternary63(ternary63_code):
    prof = coset_leader_distribution_transform(ternary63_code)
    assert prof.counts == {0: 1, 1: 6, 2: 12, 3: 8}
    assert sum(c for w, c in prof.counts.items() if w) == 26
    assert prof.covering_radius == 3


def test_coset_leaders_ternary_repetition():
    F = gf(3)
    code = LinearCode.from_parity(F, [[1, 0, 2], [0, 1, 2]])
    assert coset_leader_distribution_transform(code).counts == oracles.bfs_coset_weights(F, code.parity)


def test_coset_leaders_weight_one_rule(rng):
    for q in (3, 5, 7, 9):
        F = gf(q)
        H = oracles.random_full_rank(F, 3, 7, rng)
        code = LinearCode.from_parity(F, H)
        classes = len({code_cls for code_cls in build_table(F, 3).class_indices(H.T).tolist()})
        assert coset_leader_distribution_transform(code).counts[1] == (q - 1) * classes
        assert sum(char_function(code).point_list()) == classes


def test_coset_leaders_even_falls_back(hamming74):
    prof = coset_leader_distribution_transform(hamming74)
    assert prof.method == ORACLE and prof.counts == {0: 1, 1: 7}
    assert prof.notes


def test_coset_leaders_odd_composite_flagged(rng):
    F = gf(9)
    code = LinearCode.from_parity(F, oracles.random_full_rank(F, 2, 4, rng))
    prof = coset_leader_distribution_transform(code)
    assert prof.method == ODD_COMPOSITE and prof.notes
    assert prof.counts == oracle_coset_profile(code).counts


def test_full_rank_code_has_zero_radius():
    code = LinearCode.from_generator(gf(3), np.eye(4, dtype=int))
    assert covering_radius(code).covering_radius == 0
    assert covering_radius_transform(code).covering_radius == 0
    assert coset_leader_distribution_transform(code).counts == {0: 1}


def test_start_j(ternary63_code):
    rep = covering_radius_transform(ternary63_code, start_j=3)
    assert rep.covering_radius == 3
    assert list(rep.per_j_nonzero) == [3]
    with pytest.warns(UserWarning, match="not a lower bound"):
        bad = covering_radius_transform(ternary63_code, start_j=5)
    assert bad.covering_radius == 3 and bad.notes
    with pytest.raises(ValueError):
        covering_radius_transform(ternary63_code, start_j=0)
    with pytest.raises(IterationCapError):
        covering_radius_transform(ternary63_code, start_j=7)


def test_start_j_even_accumulates_from_one(rng):
    F = gf(2)
    for _ in range(5):
        code = LinearCode.from_parity(F, oracles.random_full_rank(F, 4, 8, rng))
        rho = covering_radius_transform(code).covering_radius
        assert covering_radius_transform(code, start_j=rho).covering_radius == rho


def test_dispatch_and_budgets(ternary63_code):
    assert covering_radius(ternary63_code, method="transform").covering_radius == 3
    assert covering_radius(ternary63_code, theta_budget=5).method == ORACLE
    with pytest.raises(BudgetError):
        covering_radius(ternary63_code, theta_budget=5, oracle_budget=5)
    with pytest.raises(ValueError):
        covering_radius(ternary63_code, method="magic")


def test_zero_column_generator_shifts_radius(rng):
    F = gf(3)
    G = oracles.random_full_rank(F, 2, 5, rng)
    base = LinearCode.from_generator(F, G)
    padded = LinearCode.from_generator(F, np.hstack([G, np.zeros((2, 2), dtype=int)]))
    rb = covering_radius(base).covering_radius
    assert covering_radius(padded).covering_radius == rb + 2


@given(seed=st.integers(0, 2**32 - 1), q=st.sampled_from([2, 3, 4, 5, 7, 8, 9]))
def test_radius_matches_oracle(seed, q):
    rng = np.random.default_rng(seed)
    F = gf(q)
    r = int(rng.integers(1, 4))
    n = int(rng.integers(r + 1, 9))
    code = LinearCode.from_parity(F, oracles.random_full_rank(F, r, n, rng))
    assert covering_radius_transform(code).covering_radius == oracle_coset_profile(code).covering_radius


def test_weight_distribution_from_parity_only(hamming74):
    assert list(code_weight_distribution(hamming74).A) == [1, 0, 0, 7, 7, 0, 0, 1]
    g = generator_from_parity(hamming74)
    assert list(code_weight_distribution(g).A) == [1, 0, 0, 7, 7, 0, 0, 1]


def test_weight_distribution_ignores_zero_columns(rng):
    F = gf(4)
    G = oracles.random_full_rank(F, 2, 4, rng)
    padded = LinearCode.from_generator(F, np.hstack([np.zeros((2, 1), dtype=int), G, np.zeros((2, 2), dtype=int)]))
    wd = code_weight_distribution(padded)
    assert wd.n == 7
    assert list(wd.A) == oracle_weight_distribution(padded)
