"""3-uniform hypergraphs and tight linear forests.

A tight path in an r-graph is a vertex sequence whose r-windows are all
edges; on v >= r vertices it carries v - r + 1 edges. A tight linear forest is
a set of vertex-disjoint tight paths, other vertices being isolated. The search
code is written for general window size r so that r = 2 can be compared against
ordinary linear forests.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

import numpy as np

from . import formulas, sweep

HYPER_MAX_N = 20
SEARCH_MAX_N = 10
SWEEP_MAX_N = 6


class HypergraphError(ValueError):
    pass


@dataclass(frozen=True)
class Hypergraph3:
    n: int
    edges: frozenset[tuple[int, int, int]]

    def __post_init__(self):
        if not 0 <= self.n <= HYPER_MAX_N:
            raise HypergraphError(f"vertex count {self.n} outside [0, {HYPER_MAX_N}]")
        norm = set()
        for e in self.edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise HypergraphError(f"edge {e} does not have 3 distinct vertices")
            if not all(0 <= x < self.n for x in t):
                raise HypergraphError(f"edge {e} leaves [0, {self.n})")
            norm.add(t)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> Hypergraph3:
        return cls(n, frozenset(tuple(e) for e in edges))

    @classmethod
    def complete(cls, n: int) -> Hypergraph3:
        return cls(n, frozenset(combinations(range(n), 3)))

    def __len__(self) -> int:
        return len(self.edges)

    def add_edge(self, e: Iterable[int]) -> Hypergraph3:
        return Hypergraph3(self.n, self.edges | {tuple(sorted(e))})


def window_edges(seq: Sequence[int], r: int) -> list[tuple[int, ...]]:
    return [tuple(sorted(seq[i:i + r])) for i in range(len(seq) - r + 1)]


@dataclass(frozen=True)
class TightLinearForest:
    n: int
    components: tuple[tuple[int, ...], ...]
    r: int = 3

    @property
    def edge_count(self) -> int:
        return sum(max(len(c) - self.r + 1, 0) for c in self.components)

    def edges(self) -> set[tuple[int, ...]]:
        return {e for seq in self.components for e in window_edges(seq, self.r)}

    def is_valid_in(self, edges: Iterable[Iterable[int]]) -> bool:
        host = {tuple(sorted(e)) for e in edges}
        flat = [v for seq in self.components for v in seq]
        if len(flat) != len(set(flat)) or not all(0 <= v < self.n for v in flat):
            return False
        return self.edges() <= host and len(self.edges()) == self.edge_count


# -- search ----------------------------------------------------------------

class _Search:
    """Depth-first search over tight linear forests with bound pruning."""

    def __init__(self, n: int, edges: Iterable[Iterable[int]], r: int):
        self.n, self.r = n, r
        self.edges = {frozenset(e) for e in edges}
        self.ordered_edges = [
            p for e in sorted(tuple(sorted(e)) for e in self.edges) for p in permutations(e)
        ]
        self.best = 0
        self.best_forest: list[tuple[int, ...]] = []
        self.dead: set = set()

    def run(self, target: int | None) -> None:
        self.target = target
        # branches that cannot exceed this many edges are cut
        self.floor = 0 if target is None else target - 1
        self._fresh(0, 0, [])

    def _record(self, count, paths):
        if count > self.best:
            self.best = count
            self.best_forest = [tuple(p) for p in paths]
            self.floor = max(self.floor, count)
        return self.target is not None and count >= self.target

    def _fresh(self, used, count, paths) -> bool:
        if self._record(count, paths):
            return True
        free = self.n - bin(used).count("1")
        if count + max(free - self.r + 1, 0) <= self.floor:
            return False
        key = (used, None, count)
        if key in self.dead:
            return False
        for seq in self.ordered_edges:
            if any(used >> v & 1 for v in seq):
                continue
            mask = used
            for v in seq:
                mask |= 1 << v
            if self._extend(mask, seq[1:], count + 1, paths + [list(seq)]):
                return True
        self.dead.add(key)
        return False

    def _extend(self, used, tail, count, paths) -> bool:
        if self._record(count, paths):
            return True
        free = self.n - bin(used).count("1")
        if count + free <= self.floor:
            return False
        key = (used, tail, count)
        if key in self.dead:
            return False
        for c in range(self.n):
            if used >> c & 1 or frozenset(tail + (c,)) not in self.edges:
                continue
            grown = paths[:-1] + [paths[-1] + [c]]
            if self._extend(used | 1 << c, tail[1:] + (c,), count + 1, grown):
                return True
        if self._fresh(used, count, paths):
            return True
        self.dead.add(key)
        return False


def _search(n: int, edges, r: int, target: int | None) -> _Search:
    if n > SEARCH_MAX_N:
        raise HypergraphError(f"exact tight-forest search limited to n <= {SEARCH_MAX_N}")
    s = _Search(n, edges, r)
    s.run(target)
    return s


def max_tight_forest(n: int, edges: Iterable[Iterable[int]], r: int = 3) -> TightLinearForest:
    """A tight linear forest with the most edges (exhaustive)."""
    s = _search(n, list(edges), r, None)
    return TightLinearForest(n, tuple(s.best_forest), r)


def has_tight_linear_forest(h: Hypergraph3, k: int) -> bool:
    """True iff ``h`` contains a tight linear forest with at least ``k`` edges."""
    if k <= 0:
        return True
    if len(h) < k or k > h.n - 2:
        return False
    return _search(h.n, h.edges, 3, k).best >= k


# -- exhaustive sweeps -----------------------------------------------------

def triple_list(n: int) -> list[tuple[int, int, int]]:
    return list(combinations(range(n), 3))


def tight_paths(n: int, r: int) -> list[tuple[int, ...]]:
    """Every tight path of the complete r-graph on n vertices, one per reversal pair."""
    out = []
    for length in range(r, n + 1):
        for seq in permutations(range(n), length):
            if seq[0] < seq[-1]:
                out.append(seq)
    return out


def tight_forest_table(n: int, r: int = 3) -> np.ndarray:
    """T[mask]: most edges in a tight linear forest inside the r-graph with that edge mask.

    Every tight linear forest of the complete r-graph is listed, marked by its
    edge mask, and the marks are spread to supersets by a max transform.
    """
    index = {e: i for i, e in enumerate(combinations(range(n), r))}
    nbits = len(index)
    if nbits > sweep.TABLE_MAX_BITS:
        raise HypergraphError(f"table sweep limited to {sweep.TABLE_MAX_BITS} edge bits")
    pieces = []
    for seq in tight_paths(n, r):
        vmask = sum(1 << v for v in seq)
        emask = 0
        for e in window_edges(seq, r):
            emask |= 1 << index[e]
        pieces.append((vmask, emask))
    values = np.full(1 << nbits, -1, dtype=np.int8)
    values[0] = 0
    seen = {(0, 0)}
    stack = [(0, 0, 0, 0)]
    while stack:
        vused, emask, count, start = stack.pop()
        for j in range(start, len(pieces)):
            vmask, pmask = pieces[j]
            if vused & vmask:
                continue
            state = (vused | vmask, emask | pmask)
            if state in seen:
                continue
            seen.add(state)
            edges = count + bin(pmask).count("1")
            values[state[1]] = max(values[state[1]], edges)
            stack.append((state[0], state[1], edges, j + 1))
    return sweep.subset_max(values, nbits)


def _check_k(k: int, r: int = 3) -> None:
    if k < r + 1 or (k - 1) % r:
        raise HypergraphError(f"k = {k} is not of the form {r}m + 1 with m >= 1")


class TightFree:
    """mask -> the 3-graph with that edge mask has no tight linear forest of k edges."""

    def __init__(self, n: int, k: int):
        self.n, self.k = n, k
        self.triples = triple_list(n)

    def __call__(self, mask: int) -> bool:
        if bin(mask).count("1") < self.k:
            return True
        edges = [t for i, t in enumerate(self.triples) if mask >> i & 1]
        return not has_tight_linear_forest(Hypergraph3.from_edges(self.n, edges), self.k)


def mask_to_hypergraph(n: int, mask: int) -> Hypergraph3:
    return Hypergraph3.from_edges(n, sweep.masks_to_pairs(mask, triple_list(n)))


def brute_ex_tight(
    n: int, k: int, method: str = "table", jobs: int = 1
) -> tuple[int, Hypergraph3]:
    """Max edges of a 3-graph on n vertices with no tight linear forest of k edges."""
    _check_k(k)
    if n > SWEEP_MAX_N:
        raise HypergraphError(f"exhaustive 3-graph sweep limited to n <= {SWEEP_MAX_N}")
    nbits = len(triple_list(n))
    if method == "table":
        value, mask = sweep.extremal_from_table(tight_forest_table(n), nbits, k)
    elif method == "search":
        value, mask, _ = sweep.search_max(nbits, TightFree(n, k), jobs=jobs)
    else:
        raise HypergraphError(f"unknown method {method!r}")
    witness = mask_to_hypergraph(n, mask)
    if len(witness) != value or has_tight_linear_forest(witness, k):
        raise HypergraphError(f"witness for (n={n}, k={k}) fails its own predicate")
    return value, witness


def hyper_witness_text(h: Hypergraph3) -> str:
    return ",".join("".join(map(str, e)) for e in sorted(h.edges)) or "-"


def verify_conjecture(n: int, k: int, r: int = 3, method: str = "table", jobs: int = 1):
    """One report row: exhaustive value against the conjectured formula.

    r = 3 sweeps 3-graphs; r = 2 reduces to the linear forest sweep on graphs.
    A row with ``agree == False`` is a counterexample to the conjecture; its
    witness column holds the offending hypergraph.
    """
    from .verifier import VerifyReport, VerifyRow, verify_linear_forest

    start = time.perf_counter()
    formula = formulas.ex_conjecture_r(n, k, r).value
    report = VerifyReport()
    if r == 3:
        brute, witness = brute_ex_tight(n, k, method=method, jobs=jobs)
        report.rows.append(VerifyRow(n, k, formula, brute, hyper_witness_text(witness)))
        report.graphs_scanned = 1 << len(triple_list(n))
    elif r == 2:
        graph_report = verify_linear_forest(n, method=method, jobs=jobs)
        row = next(row for row in graph_report.rows if (row.n, row.k) == (n, k))
        report.rows.append(VerifyRow(n, k, formula, row.brute, row.witness))
        report.graphs_scanned = graph_report.graphs_scanned
    else:
        raise HypergraphError(f"only r = 2 and r = 3 are supported, got {r}")
    report.elapsed = time.perf_counter() - start
    return report
