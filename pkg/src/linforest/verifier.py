"""Ground-truth Turán numbers by exhaustive enumeration, and an audit of
closed extremal-candidate graphs against the structural steps of the upper
bound argument."""

from __future__ import annotations

import io
import time
from dataclasses import dataclass, field
from typing import Callable

from . import formulas, sweep
from .closure import is_k_closed
from .forest import is_lnk_free, matching_number
from .formats import emit_graph6, parse_graph6
from .graph import Graph, edge_count, from_edge_mask, members, pair_list, popcount

SWEEP_MAX_N = 7
METHODS = ("table", "search")


class VerifyError(ValueError):
    pass


@dataclass(frozen=True)
class VerifyRow:
    n: int
    k: int
    formula: int
    brute: int
    witness: str

    @property
    def agree(self) -> bool:
        return self.formula == self.brute

    def tsv(self) -> str:
        return f"{self.n}\t{self.k}\t{self.formula}\t{self.brute}\t{str(self.agree).lower()}\t{self.witness}"


@dataclass
class VerifyReport:
    rows: list[VerifyRow] = field(default_factory=list)
    elapsed: float = 0.0
    graphs_scanned: int = 0

    HEADER = "n\tk\tformula\tbrute\tagree\twitness_g6"

    @property
    def all_agree(self) -> bool:
        return all(row.agree for row in self.rows)

    def to_tsv(self) -> str:
        out = io.StringIO()
        out.write(self.HEADER + "\n")
        for row in self.rows:
            out.write(row.tsv() + "\n")
        return out.getvalue()


def _check_sweep(n: int) -> None:
    if n > SWEEP_MAX_N:
        raise VerifyError(f"full labelled sweep limited to n <= {SWEEP_MAX_N}, got {n}")


# -- predicates on edge masks (picklable for worker processes) --------------

class _MaskPredicate:
    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.pairs = pair_list(n)

    def adjacency(self, mask: int) -> tuple[int, ...]:
        adj = [0] * self.n
        for i, (u, v) in enumerate(self.pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        return tuple(adj)


class LnkFree(_MaskPredicate):
    """mask -> graph has no linear forest with k edges.

    Cheap verdicts come first: fewer than k edges is certainly free, and a
    greedily grown linear forest of k edges is certainly not free. Only the
    remaining graphs reach the exact solver.
    """

    def __call__(self, mask: int) -> bool:
        if popcount(mask) < self.k:
            return True
        if self._greedy(mask) >= self.k:
            return False
        return is_lnk_free(Graph(self.n, self.adjacency(mask)), self.k)

    def _greedy(self, mask: int) -> int:
        deg = [0] * self.n
        root = list(range(self.n))

        def find(x):
            while root[x] != x:
                x = root[x]
            return x

        size = 0
        for i, (u, v) in enumerate(self.pairs):
            if mask >> i & 1 and deg[u] < 2 and deg[v] < 2:
                ru, rv = find(u), find(v)
                if ru != rv:
                    root[ru] = rv
                    deg[u] += 1
                    deg[v] += 1
                    size += 1
        return size


class MatchingAtMost(_MaskPredicate):
    """mask -> graph has matching number at most k (greedy matching pre-check)."""

    def __call__(self, mask: int) -> bool:
        if popcount(mask) <= self.k:
            return True
        used = size = 0
        for i, (u, v) in enumerate(self.pairs):
            if mask >> i & 1 and not used >> u & 1 and not used >> v & 1:
                used |= 1 << u | 1 << v
                size += 1
        if size > self.k:
            return False
        return matching_number(Graph(self.n, self.adjacency(mask))) <= self.k


def brute_ex(n: int, free_predicate: Callable[[Graph], bool], jobs: int = 1) -> tuple[int, Graph]:
    """Max edges over labelled graphs on ``n`` vertices satisfying the predicate.

    The witness is the maximiser with the smallest edge mask (bit i is the
    i-th vertex pair in lexicographic order).
    """
    value, mask, _ = _brute_search(n, free_predicate, jobs)
    return value, from_edge_mask(n, mask)


class _GraphPredicate:
    def __init__(self, n, predicate):
        self.n, self.predicate = n, predicate

    def __call__(self, mask):
        return self.predicate(from_edge_mask(self.n, mask))


def _brute_search(n, predicate, jobs):
    _check_sweep(n)
    if not isinstance(predicate, _MaskPredicate):
        predicate = _GraphPredicate(n, predicate)
    return sweep.search_max(sweep.table_bits(n), predicate, jobs=jobs)


# -- formula sweeps --------------------------------------------------------

def _validate_witness(row: VerifyRow, free: Callable[[Graph], bool]) -> None:
    g = parse_graph6(row.witness)
    if edge_count(g) != row.brute or not free(g):
        raise VerifyError(f"witness for (n={row.n}, k={row.k}) fails its own predicate")


def _sweep(n_max, pairs_for, formula, stat_table, predicate_cls, free_test, method, jobs, n_min):
    if method not in METHODS:
        raise VerifyError(f"unknown method {method!r}")
    _check_sweep(n_max)
    report = VerifyReport()
    start = time.perf_counter()
    for n in range(n_min, n_max + 1):
        nbits = sweep.table_bits(n)
        table = stat_table(n) if method == "table" else None
        if method == "table":
            report.graphs_scanned += 1 << nbits
        for k in pairs_for(n):
            if method == "table":
                brute, mask = sweep.extremal_from_table(table, nbits, free_threshold(k, predicate_cls))
            else:
                brute, mask, tested = sweep.search_max(nbits, predicate_cls(n, k), jobs=jobs)
                report.graphs_scanned += tested
            row = VerifyRow(n, k, formula(n, k).value, brute, emit_graph6(from_edge_mask(n, mask)))
            _validate_witness(row, lambda g, k=k: free_test(g, k))
            report.rows.append(row)
    report.elapsed = time.perf_counter() - start
    return report


def free_threshold(k: int, predicate_cls) -> int:
    # LnkFree: L < k.  MatchingAtMost: nu <= k, i.e. nu < k + 1.
    return k if predicate_cls is LnkFree else k + 1


def verify_linear_forest(n_max: int, method: str = "table", jobs: int = 1) -> VerifyReport:
    """Exhaustive ex(n; L_{n,k}) against the closed form, 2 <= n <= n_max, 1 <= k < n."""
    return _sweep(
        n_max,
        lambda n: range(1, n),
        formulas.ex_linear_forest,
        sweep.linear_forest_table,
        LnkFree,
        is_lnk_free,
        method,
        jobs,
        n_min=2,
    )


def verify_erdos_gallai(
    n_max: int, method: str = "table", jobs: int = 1, k_max: int | None = None
) -> VerifyReport:
    """Exhaustive ex(n; M_{k+1}) against the closed form, 1 <= n <= n_max, 0 <= k <= n // 2."""
    def ks(n):
        top = n // 2 if k_max is None else min(n // 2, k_max)
        return range(0, top + 1)

    return _sweep(
        n_max,
        ks,
        formulas.ex_matching,
        sweep.matching_table,
        MatchingAtMost,
        lambda g, k: matching_number(g) <= k,
        method,
        jobs,
        n_min=1,
    )


# -- proof-skeleton audit --------------------------------------------------

class AuditPreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class AuditRecord:
    s: int
    c_size: int
    clique_ok: bool
    s_bound_ok: bool
    degree_bound_ok: bool
    case_tag: str
    bound_value: int
    edges: int
    edge_bound_ok: bool

    @property
    def passed(self) -> bool:
        return self.clique_ok and self.s_bound_ok and self.degree_bound_ok and self.edge_bound_ok


def _ceil_half(x: int) -> int:
    return -(-x // 2)


def audit_closed_graph(g: Graph, k: int, family: str = "lnk") -> AuditRecord:
    """Check each structural claim of the upper-bound argument on one graph.

    For ``family="lnk"`` the graph must be k-closed with no linear forest of k
    edges; for ``family="matching"`` it must be (2k+1)-closed with matching
    number at most k.
    """
    n = g.n
    if family == "lnk":
        threshold, high, s_max = k, _ceil_half(k), k
        if not is_k_closed(g, k) or not is_lnk_free(g, k):
            raise AuditPreconditionError("graph must be k-closed and L_{n,k}-free")
    elif family == "matching":
        threshold, high, s_max = 2 * k + 1, k + 1, 2 * k + 1
        if not is_k_closed(g, threshold) or matching_number(g) > k:
            raise AuditPreconditionError("graph must be (2k+1)-closed with matching number <= k")
    else:
        raise AuditPreconditionError(f"unknown family {family!r}")

    deg = g.degrees()
    core = 0
    for v in range(n):
        if deg[v] >= high:
            core |= 1 << v
    clique_ok = all(core & ~(g.adj[v] | 1 << v) == 0 for v in members(core))

    clique = core if clique_ok else 0
    for v in range(n):
        if not clique >> v & 1 and clique & ~g.adj[v] == 0:
            clique |= 1 << v
    s = popcount(clique)
    outside = [v for v in range(n) if not clique >> v & 1]
    deg_cap = min(high - 1, threshold - 1 - (s - 1))
    degree_bound_ok = all(deg[x] <= deg_cap for x in outside)

    pairs = s * (s - 1)
    if family == "lnk":
        case1 = s <= _ceil_half(k - 1)
        twice_bound = pairs + ((s - 1 + high - 1) * (n - s) if case1 else 2 * (k - s) * (n - s))
    else:
        case1 = s < k + 1
        twice_bound = pairs + ((s - 1 + k) * (n - s) if case1 else 2 * (2 * k - s + 1) * (n - s))
    e = edge_count(g)
    return AuditRecord(
        s=s,
        c_size=popcount(core),
        clique_ok=clique_ok,
        s_bound_ok=s <= s_max,
        degree_bound_ok=degree_bound_ok,
        case_tag="case1" if case1 else "case2",
        bound_value=twice_bound // 2,
        edges=e,
        edge_bound_ok=2 * e <= twice_bound,
    )
