"""Exact solvers: maximum linear forest, matching number, Hamiltonicity,
Hamiltonian completion number, and one-edge augmentation of a linear forest.

All solvers are exponential in ``n`` and refuse inputs above
``SOLVER_MAX_N`` vertices instead of approximating.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .graph import Graph, members, popcount

SOLVER_MAX_N = 20
# below this size the plain-Python DP beats numpy's per-call overhead
_NUMPY_MIN_N = 11

Edge = tuple[int, int]


class SizeCapError(ValueError):
    """Instance too large for an exact solver."""


class ForestPreconditionError(ValueError):
    """Arguments to augment_linear_forest violate its hypotheses."""


class NotALinearForest(ForestPreconditionError):
    pass


class SameComponent(ForestPreconditionError):
    pass


class DegreeSumTooSmall(ForestPreconditionError):
    pass


class SolverInvariantError(AssertionError):
    """A result guaranteed by theory was not found: a solver bug."""


def _norm(edges: Iterable[Edge]) -> frozenset[Edge]:
    return frozenset((min(u, v), max(u, v)) for u, v in edges)


def is_linear_forest(host_n: int, edges: Iterable[Edge]) -> bool:
    """True iff every vertex has degree at most 2 and there is no cycle."""
    edges = _norm(edges)
    deg = [0] * host_n
    parent = list(range(host_n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        if u == v or not (0 <= u < host_n and 0 <= v < host_n):
            return False
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


@dataclass(frozen=True)
class LinearForest:
    host_n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        object.__setattr__(self, "edges", _norm(self.edges))
        if not is_linear_forest(self.host_n, self.edges):
            raise NotALinearForest(f"edge set {sorted(self.edges)} is not a linear forest")

    def __len__(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def paths(self) -> list[list[int]]:
        """Components as vertex sequences; isolated vertices are 1-vertex paths."""
        nbrs: list[list[int]] = [[] for _ in range(self.host_n)]
        for u, v in sorted(self.edges):
            nbrs[u].append(v)
            nbrs[v].append(u)
        seen = [False] * self.host_n
        out = []
        for start in range(self.host_n):
            if seen[start] or len(nbrs[start]) == 2:
                continue
            seq, prev, cur = [], -1, start
            while cur != -1:
                seen[cur] = True
                seq.append(cur)
                nxt = [w for w in nbrs[cur] if w != prev]
                prev, cur = cur, (nxt[0] if nxt else -1)
            out.append(seq)
        return out

    def component_of(self) -> list[int]:
        label = [0] * self.host_n
        for i, seq in enumerate(self.paths()):
            for v in seq:
                label[v] = i
        return label

    def endpoints(self) -> set[int]:
        return {v for v in range(self.host_n) if self.degree(v) <= 1}

    def is_subgraph_of(self, g: Graph) -> bool:
        return self.host_n == g.n and all(g.has_edge(u, v) for u, v in self.edges)


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset[Edge]


def _check_cap(g: Graph) -> None:
    if g.n > SOLVER_MAX_N:
        raise SizeCapError(
            f"exact solver limited to n <= {SOLVER_MAX_N} vertices, got n = {g.n}"
        )


# -- path cover DP ---------------------------------------------------------
#
# best[S]: fewest paths covering vertex set S.
# ends[S]: vertices v for which some optimal cover of S has a path ending at v.
# A cover of S ending at u either extends a path of S-u ending at a neighbour
# of u, or starts a new path at u; non-optimal covers of S-u never help, so
#     cost(S, u) = best[S-u] + (0 if adj[u] & ends[S-u] else 1).


@lru_cache(maxsize=4)
def _layers(n: int) -> tuple[np.ndarray, list[slice]]:
    masks = np.arange(1 << n, dtype=np.int64)
    counts = np.zeros(1 << n, dtype=np.int64)
    for b in range(n):
        counts += (masks >> b) & 1
    order = np.argsort(counts, kind="stable")
    bounds = np.searchsorted(counts[order], np.arange(n + 2))
    return masks[order], [slice(bounds[p], bounds[p + 1]) for p in range(n + 1)]


def _path_cover_py(n: int, adj: tuple[int, ...]) -> tuple[list[int], list[int]]:
    size = 1 << n
    best = [0] * size
    ends = [0] * size
    for mask in range(1, size):
        b, e = n + 1, 0
        rest = mask
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            prev = mask ^ low
            cost = best[prev] + (0 if adj[u] & ends[prev] else 1)
            if cost < b:
                b, e = cost, low
            elif cost == b:
                e |= low
        best[mask] = b
        ends[mask] = e
    return best, ends


def _path_cover_np(n: int, adj: tuple[int, ...]) -> tuple[np.ndarray, np.ndarray]:
    ordered, layers = _layers(n)
    best = np.zeros(1 << n, dtype=np.int16)
    ends = np.zeros(1 << n, dtype=np.int64)
    for p in range(1, n + 1):
        layer = ordered[layers[p]]
        cur_best = np.full(layer.size, n + 1, dtype=np.int16)
        cur_ends = np.zeros(layer.size, dtype=np.int64)
        for u in range(n):
            sel = np.flatnonzero((layer >> u) & 1)
            prev = layer[sel] ^ (1 << u)
            cost = best[prev] + ((ends[prev] & adj[u]) == 0)
            old = cur_best[sel]
            bit = np.int64(1 << u)
            cur_ends[sel] = np.where(
                cost < old, bit, np.where(cost == old, cur_ends[sel] | bit, cur_ends[sel])
            )
            cur_best[sel] = np.minimum(old, cost)
        best[layer] = cur_best
        ends[layer] = cur_ends
    return best, ends


def _path_cover_tables(g: Graph, use_numpy: bool | None = None):
    if use_numpy is None:
        use_numpy = g.n >= _NUMPY_MIN_N
    return (_path_cover_np if use_numpy else _path_cover_py)(g.n, g.adj)


def min_path_cover(g: Graph) -> int:
    """Fewest vertex-disjoint paths (isolated vertices included) covering V(G)."""
    _check_cap(g)
    if g.n == 0:
        return 0
    best, _ = _path_cover_tables(g)
    return int(best[(1 << g.n) - 1])


def max_linear_forest(g: Graph, *, use_numpy: bool | None = None) -> SolveResult:
    """Largest linear forest contained in ``g``.

    A spanning linear forest with ``c`` components has ``n - c`` edges, so the
    answer is ``n`` minus the minimum path cover.
    """
    _check_cap(g)
    if g.n == 0:
        return SolveResult(0, frozenset())
    best, ends = _path_cover_tables(g, use_numpy)
    mask = (1 << g.n) - 1
    witness = []
    cur = _lowest(int(ends[mask]))
    while mask:
        prev = mask ^ (1 << cur)
        if not prev:
            break
        link = g.adj[cur] & int(ends[prev])
        if link:
            nxt = _lowest(link)
            witness.append((min(cur, nxt), max(cur, nxt)))
        else:
            nxt = _lowest(int(ends[prev]))
        mask, cur = prev, nxt
    value = g.n - int(best[(1 << g.n) - 1])
    if len(witness) != value or not is_linear_forest(g.n, witness):
        raise SolverInvariantError("path cover reconstruction produced an invalid witness")
    return SolveResult(value, frozenset(witness))


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def is_lnk_free(g: Graph, k: int) -> bool:
    """True iff ``g`` contains no linear forest with ``k`` edges."""
    _check_cap(g)
    if k <= 0:
        return False
    if k > g.n - 1 or k > _edge_total(g):
        return True
    return max_linear_forest(g).value < k


def _edge_total(g: Graph) -> int:
    return sum(popcount(row) for row in g.adj) // 2


# -- Hamiltonicity ---------------------------------------------------------

def _ham_reach_py(n: int, adj: tuple[int, ...]) -> int:
    # reach[S]: ends of paths that start at 0 and cover S (only S containing 0)
    reach = [0] * (1 << n)
    reach[1] = 1
    for mask in range(3, 1 << n, 2):
        r = 0
        rest = mask & ~1
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            if reach[mask ^ low] & adj[u]:
                r |= low
        reach[mask] = r
    return reach[(1 << n) - 1]


def _ham_reach_np(n: int, adj: tuple[int, ...]) -> int:
    ordered, layers = _layers(n)
    reach = np.zeros(1 << n, dtype=np.int64)
    reach[1] = 1
    for p in range(2, n + 1):
        layer = ordered[layers[p]]
        layer = layer[(layer & 1) == 1]
        cur = np.zeros(layer.size, dtype=np.int64)
        for u in range(1, n):
            sel = np.flatnonzero((layer >> u) & 1)
            ok = (reach[layer[sel] ^ (1 << u)] & adj[u]) != 0
            cur[sel[ok]] |= np.int64(1 << u)
        reach[layer] = cur
    return int(reach[(1 << n) - 1])


def is_hamiltonian(g: Graph) -> bool:
    """Spanning cycle test; graphs with fewer than 3 vertices are not Hamiltonian."""
    _check_cap(g)
    if g.n < 3 or any(row == 0 for row in g.adj):
        return False
    reach = (_ham_reach_np if g.n >= _NUMPY_MIN_N else _ham_reach_py)(g.n, g.adj)
    return bool(reach & g.adj[0])


def hamiltonian_completion(g: Graph) -> int:
    """Fewest edges whose addition makes ``g`` Hamiltonian."""
    if is_hamiltonian(g):
        return 0
    return g.n - max_linear_forest(g).value


# -- matching --------------------------------------------------------------

def max_matching(g: Graph) -> SolveResult:
    _check_cap(g)
    adj = g.adj

    @lru_cache(maxsize=None)
    def nu(mask: int) -> int:
        if not mask:
            return 0
        v = _lowest(mask)
        rest = mask ^ (1 << v)
        out = nu(rest)
        for u in members(adj[v] & rest):
            out = max(out, 1 + nu(rest ^ (1 << u)))
        return out

    mask = g.vertices
    value = nu(mask)
    witness = []
    while mask:
        v = _lowest(mask)
        rest = mask ^ (1 << v)
        target = nu(mask)
        for u in members(adj[v] & rest):
            if 1 + nu(rest ^ (1 << u)) == target:
                witness.append((v, u))
                rest ^= 1 << u
                break
        mask = rest
    nu.cache_clear()
    return SolveResult(value, frozenset(witness))


def matching_number(g: Graph) -> int:
    return max_matching(g).value


# -- augmentation ----------------------------------------------------------

def augment_linear_forest(g: Graph, forest: LinearForest, u: int, v: int) -> LinearForest:
    """Find a linear forest with ``len(forest) + 1`` edges in ``g``.

    ``u`` and ``v`` must be endpoints of different components of ``forest``
    (an isolated vertex is both ends of its own path) and satisfy
    ``d(u) + d(v) >= len(forest) + 1``; under these hypotheses such a forest
    always exists.
    """
    k = len(forest) + 1
    if forest.host_n != g.n or not forest.is_subgraph_of(g):
        raise NotALinearForest("forest is not a subgraph of the host graph")
    comp = forest.component_of()
    ends = forest.endpoints()
    if u not in ends or v not in ends:
        raise ForestPreconditionError(f"{u} and {v} must both be path endpoints")
    if comp[u] == comp[v]:
        raise SameComponent(f"{u} and {v} lie on the same path")
    if g.degree(u) + g.degree(v) < k:
        raise DegreeSumTooSmall(
            f"d({u}) + d({v}) = {g.degree(u) + g.degree(v)} < {k}"
        )

    found = _join_endpoints(g, forest) or _rotate_and_join(g, forest)
    if found is None:
        _check_cap(g)
        best = max_linear_forest(g)
        if best.value < k:
            raise SolverInvariantError(
                f"no linear forest with {k} edges although the degree condition holds"
            )
        found = LinearForest(g.n, frozenset(_trim(best.witness, k)))
    if len(found) != k or not found.is_subgraph_of(g):
        raise SolverInvariantError("augmentation returned an invalid forest")
    return found


def _join_endpoints(g: Graph, forest: LinearForest) -> LinearForest | None:
    comp = forest.component_of()
    ends = sorted(forest.endpoints())
    for i, a in enumerate(ends):
        for b in ends[i + 1:]:
            if comp[a] != comp[b] and g.has_edge(a, b):
                return LinearForest(forest.host_n, forest.edges | {(a, b)})
    return None


def _rotate_and_join(g: Graph, forest: LinearForest) -> LinearForest | None:
    # Posa rotation: for a path x0 ... x_i x_{i+1} ... x_end with x_end ~ x_i,
    # swap edge x_i x_{i+1} for x_i x_end; x_{i+1} becomes the new endpoint.
    for seq in forest.paths():
        if len(seq) < 3:
            continue
        for path in (seq, seq[::-1]):
            tail = path[-1]
            for i in range(len(path) - 2):
                if not g.has_edge(tail, path[i]):
                    continue
                rotated = (forest.edges - {_edge(path[i], path[i + 1])}) | {_edge(path[i], tail)}
                hit = _join_endpoints(g, LinearForest(forest.host_n, rotated))
                if hit is not None:
                    return hit
    return None


def _edge(a: int, b: int) -> Edge:
    return (a, b) if a < b else (b, a)


def _trim(edges: Iterable[Edge], k: int) -> list[Edge]:
    return sorted(edges)[:k]
