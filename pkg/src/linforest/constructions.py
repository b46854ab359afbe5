"""Extremal graph families for linear forests and matchings, with certification.

Labelling: clique (dominating) vertices first, then the K_2 pair in the even
case, then the independent vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import formulas
from .forest import SOLVER_MAX_N, is_lnk_free, matching_number
from .graph import Graph, complete, disjoint_union, edge_count, empty, join

VARIANTS = ("clique", "join")


class ConstructionError(ValueError):
    pass


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise ConstructionError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def extremal_lnk(n: int, k: int, variant: str) -> Graph:
    """K_k + E_{n-k} (clique) or the join family that is tight for large n."""
    _check_variant(variant)
    if not 1 <= k <= n - 1:
        raise ConstructionError(f"need 1 <= k <= n - 1, got n={n}, k={k}")
    if variant == "clique":
        return disjoint_union(complete(k), empty(n - k))
    if k % 2:
        a = (k - 1) // 2
        return join(complete(a), empty(n - a))
    a = k // 2 - 1
    return join(complete(a), disjoint_union(complete(2), empty(n - a - 2)))


def extremal_matching(n: int, k: int, variant: str) -> Graph:
    """K_{2k+1} + E_{n-2k-1} (clique) or K_k v E_{n-k} (join)."""
    _check_variant(variant)
    if k < 0:
        raise ConstructionError(f"need k >= 0, got {k}")
    if variant == "clique":
        if n < 2 * k + 1:
            raise ConstructionError(f"clique variant needs n >= 2k + 1 = {2 * k + 1}, got {n}")
        return disjoint_union(complete(2 * k + 1), empty(n - 2 * k - 1))
    if n < k:
        raise ConstructionError(f"join variant needs n >= k = {k}, got {n}")
    return join(complete(k), empty(n - k))


@dataclass(frozen=True)
class Certificate:
    edge_count: int
    branch: str | None
    branch_value: int | None
    verdict: str  # "exact-free", "not-free" or "structural-only"

    @property
    def free(self) -> bool | None:
        return {"exact-free": True, "not-free": False}.get(self.verdict)


def certify(g: Graph, k: int, family: str) -> Certificate:
    """Compare ``g`` against the formula branches and, when feasible, test freeness.

    ``family`` is ``"lnk"`` (no linear forest with k edges) or ``"matching"``
    (matching number at most k). Above the solver cap only the edge count is
    compared and the verdict is ``structural-only``.
    """
    n, e = g.n, edge_count(g)
    if family == "lnk":
        branches = {
            "clique-branch": formulas.lnk_clique_branch(n, k),
            "join-branch": formulas.lnk_join_branch(n, k),
        }
    elif family == "matching":
        value = formulas.ex_matching(n, k)
        branches = {"clique-branch": value.clique_branch, "join-branch": value.join_branch}
    else:
        raise ConstructionError(f"unknown family {family!r}")
    branch = next((name for name, v in branches.items() if v == e), None)
    if n > SOLVER_MAX_N:
        verdict = "structural-only"
    elif family == "lnk":
        verdict = "exact-free" if is_lnk_free(g, k) else "not-free"
    else:
        verdict = "exact-free" if matching_number(g) <= k else "not-free"
    return Certificate(e, branch, branches.get(branch) if branch else None, verdict)
