from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from linforest.formulas import (
    Branch,
    FormulaRangeError,
    binom,
    ex_conjecture_r,
    ex_ham_path,
    ex_linear_forest,
    ex_matching,
)

from .oracles import linear_forest_by_mask


@pytest.fixture(scope="module")
def ex6_by_brute_force():
    table = linear_forest_by_mask(6)
    counts = [bin(m).count("1") for m in range(len(table))]
    return {k: max(c for c, lf in zip(counts, table) if lf < k) for k in range(1, 6)}


def test_linear_forest_examples(ex6_by_brute_force):
    v = ex_linear_forest(6, 5)
    assert (v.value, v.attained_by) == (10, Branch.CLIQUE)
    assert ex6_by_brute_force[5] == 10
    v = ex_linear_forest(10, 5)
    assert (v.value, v.attained_by) == (17, Branch.JOIN)
    assert (v.clique_branch, v.join_branch) == (10, 45 - 28)
    v = ex_linear_forest(6, 4)
    assert (v.value, v.attained_by) == (6, Branch.TIE)
    assert ex6_by_brute_force[4] == 6
    assert ex_linear_forest(5, 4).value == comb(4, 2)


def test_all_n6_values_match_brute_force(ex6_by_brute_force):
    for k, brute in ex6_by_brute_force.items():
        assert ex_linear_forest(6, k).value == brute


@pytest.mark.parametrize("n, k", [(5, 0), (5, 5), (1, 1), (3, -1)])
def test_linear_forest_range(n, k):
    with pytest.raises(FormulaRangeError):
        ex_linear_forest(n, k)


def test_matching_examples():
    assert ex_matching(9, 0).value == 0
    assert ex_matching(10, 2).value == 17
    assert ex_matching(5, 2).value == 10
    with pytest.raises(FormulaRangeError):
        ex_matching(0, 1)
    with pytest.raises(FormulaRangeError):
        ex_matching(5, -1)


def test_matching_small_n_is_complete_graph():
    # nu <= n // 2 <= k: nothing is excluded
    assert ex_matching(4, 2).value == 6
    assert ex_matching(6, 3).value == 15


def test_ham_path():
    assert ex_ham_path(5) == 6
    assert ex_ham_path(2) == 0
    for n in range(2, 101):
        assert ex_ham_path(n) == ex_linear_forest(n, n - 1).value
    with pytest.raises(FormulaRangeError):
        ex_ham_path(1)


def test_conjecture_examples():
    v = ex_conjecture_r(6, 4, 3)
    assert (v.value, v.attained_by) == (10, Branch.TIE)
    for k in range(2, 12):
        for n in range(k, 20):
            assert ex_conjecture_r(n, k, 1).value == k - 1


def test_conjecture_r2_is_the_odd_linear_forest_case():
    for m in range(1, 11):
        k = 2 * m + 1
        for n in range(k + 1, 51):
            assert ex_conjecture_r(n, k, 2).value == ex_linear_forest(n, k).value


@pytest.mark.parametrize("n, k, r", [(6, 5, 3), (6, 1, 3), (3, 4, 3), (6, 4, 0)])
def test_conjecture_range(n, k, r):
    with pytest.raises(FormulaRangeError):
        ex_conjecture_r(n, k, r)


def test_reduction_identity():
    for n in range(2, 201):
        for k in range(1, n):
            if 2 * k + 1 <= n - 1:
                assert ex_linear_forest(n, 2 * k + 1).value == ex_matching(n, k).value
        assert ex_linear_forest(n, n - 1).value == comb(n - 1, 2)


def test_monotone_in_n_and_k():
    for n in range(2, 80):
        for k in range(1, n):
            v = ex_linear_forest(n, k).value
            if k + 1 <= n - 1:
                assert ex_linear_forest(n, k + 1).value >= v
            assert ex_linear_forest(n + 1, k).value >= v


def test_eventual_crossover_to_join_branch():
    for k in range(1, 31):
        assert ex_linear_forest(k + 1, k).clique_branch == ex_linear_forest(3 * k, k).clique_branch
        if k >= 3:
            joins = [ex_linear_forest(n, k).join_branch for n in range(k + 1, 6 * k)]
            assert all(a < b for a, b in zip(joins, joins[1:]))
        n = k + 1
        while ex_linear_forest(n, k).attained_by is not Branch.JOIN and n < 10 * k + 10:
            n += 1
        if k >= 3:
            assert ex_linear_forest(n, k).attained_by is Branch.JOIN
            assert all(
                ex_linear_forest(m, k).attained_by is Branch.JOIN for m in range(n, n + 50)
            )


@given(st.integers(2, 10**6), st.data())
def test_large_arguments_exact(n, data):
    k = data.draw(st.integers(1, n - 1))
    v = ex_linear_forest(n, k)
    c = 0 if k % 2 else 1
    assert v.value == max(comb(k, 2), comb(n, 2) - comb(n - (k - 1) // 2, 2) + c)
    assert v.value >= 0


def test_binom():
    assert binom(3, 5) == 0
    assert binom(10**6, 2) == 10**6 * (10**6 - 1) // 2
    with pytest.raises(FormulaRangeError):
        binom(-1, 2)
