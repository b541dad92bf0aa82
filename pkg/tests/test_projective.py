import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from covrad.errors import BudgetError
from covrad.gf import gf
from covrad.projective import ProjectiveTable, build_table, point_index, theta

import oracles

SMALL = [(q, k) for q in (2, 3, 4, 5, 7, 8, 9) for k in (1, 2, 3, 4) if q**k <= 9**4]


@pytest.mark.parametrize("q,k,expected", [(3, 2, 4), (3, 3, 13), (2, 3, 7), (9, 1, 1), (2, 22, 2**22 - 1)])
def test_theta(q, k, expected):
    assert theta(q, k) == expected


def test_points_gf2():
    t = build_table(gf(2), 2)
    assert [tuple(p) for p in t.points] == [(0, 1), (1, 1), (1, 0)]


def test_points_and_nm_gf3():
    t = build_table(gf(3), 2)
    assert [tuple(p) for p in t.points] == [(0, 1), (1, 1), (2, 1), (1, 0)]
    assert t.NM.tolist() == [[1, 1, 1, 0], [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]]
    assert t.R.tolist() == [[-1, -1, -1, 2], [-1, -1, 2, -1], [-1, 2, -1, -1], [2, -1, -1, -1]]


def test_ternary_row_order():
    t = build_table(gf(3), 3)
    rows = ["001", "011", "021", "010", "101", "111", "121", "110", "201", "211", "221", "210", "100"]
    assert ["".join(map(str, p)) for p in t.points] == rows


def test_point_index_examples():
    F = gf(3)
    assert point_index(build_table(F, 2), [0, 2]) == (1, 2)
    t3 = build_table(F, 3)
    assert point_index(t3, [1, 0, 0]) == (13, 1)
    assert point_index(t3, [0, 0, 1]) == (1, 1)
    with pytest.raises(ValueError):
        t3.point_index([0, 0, 0])


@pytest.mark.parametrize("q,k", SMALL)
def test_points_structure(q, k):
    F = gf(q)
    t = build_table(F, k)
    assert len(t.points) == theta(q, k)
    for pt in t.points:
        nz = np.nonzero(pt)[0]
        assert pt[nz[-1]] == 1
    # pairwise non-proportional: canonical forms are distinct
    assert len({tuple(p) for p in t.points}) == t.theta


@pytest.mark.parametrize("q,k", [(q, k) for q, k in SMALL if q**k <= 729])
def test_every_vector_lands_in_one_class(q, k):
    F = gf(q)
    t = build_table(F, k)
    sizes = np.zeros(t.theta + 1, dtype=int)
    for v in itertools.product(range(q), repeat=k):
        if any(v):
            u, lam = t.point_index(v)
            assert tuple(oracles.scale_vec(F, lam, t.points[u - 1])) == v
            sizes[u] += 1
    assert np.all(sizes[1:] == q - 1)


@pytest.mark.parametrize("q,k", [(q, k) for q, k in SMALL if q <= 9 and k <= 4 and theta(q, k) <= 820])
def test_nm_matches_scalar_inner_products(q, k):
    F = gf(q)
    t = build_table(F, k)
    pts = [tuple(p) for p in t.points]
    NM = np.array([[int(oracles.dot(F, a, b) != 0) for b in pts] for a in pts])
    assert np.array_equal(NM, t.NM)
    assert np.array_equal(t.R, (q - 1) * np.ones_like(NM) - q * NM)
    assert np.array_equal(t.row_ones, NM.sum(axis=1))


@pytest.mark.parametrize("q,k", [(3, 3), (4, 3), (2, 5), (5, 2)])
def test_r_row_sums(q, k):
    t = build_table(gf(q), k)
    ones = np.ones(t.theta, dtype=object)
    rs = t.r_matvec(ones)
    assert list(rs) == [(q - 1) * t.theta - q * c for c in t.row_ones]
    # every simplex row has the same number of nonzero inner products
    assert len(set(rs.tolist())) == 1


@given(
    qk=st.sampled_from([(3, 3), (4, 2), (2, 4), (9, 2), (5, 3)]),
    data=st.data(),
)
def test_point_index_round_trip(qk, data):
    q, k = qk
    F = gf(q)
    t = build_table(F, k)
    u = data.draw(st.integers(1, t.theta))
    lam = data.draw(st.integers(1, q - 1))
    assert t.point_index(t.points[u - 1]) == (u, 1)
    v = oracles.scale_vec(F, lam, t.points[u - 1])
    assert t.point_index(v) == (u, lam)


@given(
    qk=st.sampled_from([(3, 4), (2, 6), (4, 3), (8, 2)]),
    vals=st.lists(st.integers(-(10**40), 10**40), min_size=100, max_size=100),
)
def test_exact_matvec_big_integers(qk, vals):
    q, k = qk
    t = build_table(gf(q), k)
    v = np.array((vals * 3)[: t.theta], dtype=object)
    NM = t.NM.astype(object)
    assert list(t.nm_matvec(v)) == list(NM.dot(v))
    assert list(t.r_matvec(v)) == list(t.R.astype(object).dot(v))


def test_chunked_matvec_path():
    # theta above the dense-cache limit exercises the packed, row-chunked path
    t = build_table(gf(3), 8)
    assert t.theta == 3280
    rng = np.random.default_rng(3)
    v = rng.integers(-5, 5, t.theta)
    expected = t.NM[:50].astype(np.int64) @ v
    assert list(t.nm_matvec(v.astype(object))[:50]) == expected.tolist()


def test_budget():
    with pytest.raises(BudgetError):
        ProjectiveTable(gf(3), 5, budget=100)
