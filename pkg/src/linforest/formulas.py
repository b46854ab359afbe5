"""Closed-form Turán numbers for linear forests, matchings, and the tight
linear forest conjecture in r-graphs.

All arithmetic uses Python integers, so values are exact for any size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb


class FormulaRangeError(ValueError):
    pass


class Branch(str, enum.Enum):
    CLIQUE = "clique-branch"
    JOIN = "join-branch"
    TIE = "tie"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TuranValue:
    value: int
    attained_by: Branch
    clique_branch: int
    join_branch: int


def binom(a: int, b: int) -> int:
    """C(a, b), zero when a < b; negative arguments are rejected."""
    if a < 0 or b < 0:
        raise FormulaRangeError(f"binomial C({a}, {b}) with a negative argument")
    return comb(a, b)


def _pick(clique: int, join: int) -> TuranValue:
    if clique > join:
        tag = Branch.CLIQUE
    elif join > clique:
        tag = Branch.JOIN
    else:
        tag = Branch.TIE
    return TuranValue(max(clique, join), tag, clique, join)


def lnk_clique_branch(n: int, k: int) -> int:
    return binom(k, 2)


def lnk_join_branch(n: int, k: int) -> int:
    c = 0 if k % 2 else 1
    return binom(n, 2) - binom(n - (k - 1) // 2, 2) + c


def ex_linear_forest(n: int, k: int) -> TuranValue:
    """Maximum edges of an n-vertex graph with no linear forest of k edges."""
    if not 1 <= k <= n - 1:
        raise FormulaRangeError(f"need 1 <= k <= n - 1, got n={n}, k={k}")
    return _pick(lnk_clique_branch(n, k), lnk_join_branch(n, k))


def ex_matching(n: int, k: int) -> TuranValue:
    """Maximum edges of an n-vertex graph with matching number at most k."""
    if n < 1 or k < 0:
        raise FormulaRangeError(f"need n >= 1 and k >= 0, got n={n}, k={k}")
    if 2 * k + 1 > n:
        # K_{2k+1} does not fit and nu <= n // 2 <= k holds for every graph,
        # so the clique branch shrinks to K_n
        return _pick(binom(n, 2), binom(n, 2) - binom(max(n - k, 0), 2))
    return _pick(binom(2 * k + 1, 2), binom(n, 2) - binom(n - k, 2))


def ex_ham_path(n: int) -> int:
    if n < 2:
        raise FormulaRangeError(f"need n >= 2, got {n}")
    return binom(n - 1, 2)


def ex_conjecture_r(n: int, k: int, r: int) -> TuranValue:
    """Conjectured value of ex_r(n; tight linear forests with >= k edges), k = m r + 1."""
    if r < 1:
        raise FormulaRangeError(f"need r >= 1, got {r}")
    m, rem = divmod(k - 1, r)
    if rem:
        raise FormulaRangeError(f"k = {k} is not 1 mod r = {r}")
    if m < 1:
        raise FormulaRangeError(f"k = {k} gives m = {m}; need m >= 1")
    if n < k + r - 2:
        raise FormulaRangeError(f"need n >= k + r - 2 = {k + r - 2}, got n = {n}")
    return _pick(binom(k + r - 2, r), binom(n, r) - binom(n - m, r))
