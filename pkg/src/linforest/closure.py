"""k-closure and the stability checks it relies on."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .forest import is_lnk_free, matching_number
from .graph import Graph


class ClosurePreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ClosureTrace:
    initial: Graph
    k: int
    added_edges: tuple[tuple[int, int], ...]
    final: Graph


def _qualifying_pairs(adj: list[int], n: int, k: int):
    deg = [bin(row).count("1") for row in adj]
    for u in range(n):
        for v in range(u + 1, n):
            if not adj[u] >> v & 1 and deg[u] + deg[v] >= k:
                yield u, v


def k_closure(g: Graph, k: int, rng: random.Random | None = None) -> ClosureTrace:
    """Repeatedly join a non-adjacent pair with degree sum >= k until none is left.

    Without ``rng`` the first qualifying pair in lexicographic order is added at
    every step; with ``rng`` a uniformly random qualifying pair is chosen
    (used to exercise order independence).
    """
    adj = list(g.adj)
    added = []
    while True:
        if rng is None:
            pair = next(_qualifying_pairs(adj, g.n, k), None)
        else:
            pairs = list(_qualifying_pairs(adj, g.n, k))
            pair = rng.choice(pairs) if pairs else None
        if pair is None:
            break
        u, v = pair
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        added.append(pair)
    return ClosureTrace(g, k, tuple(added), Graph(g.n, tuple(adj)))


def closure(g: Graph, k: int) -> Graph:
    return k_closure(g, k).final


def is_k_closed(g: Graph, k: int) -> bool:
    return next(_qualifying_pairs(list(g.adj), g.n, k), None) is None


def check_trace(trace: ClosureTrace) -> bool:
    """Replay a trace and confirm every addition qualified and the end is closed."""
    adj = list(trace.initial.adj)
    for u, v in trace.added_edges:
        if adj[u] >> v & 1:
            return False
        if bin(adj[u]).count("1") + bin(adj[v]).count("1") < trace.k:
            return False
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return tuple(adj) == trace.final.adj and is_k_closed(trace.final, trace.k)


def _check_pair(g: Graph, u: int, v: int, threshold: int) -> None:
    if u == v or not (0 <= u < g.n and 0 <= v < g.n):
        raise ClosurePreconditionError(f"({u}, {v}) is not a pair of distinct vertices")
    if g.has_edge(u, v):
        raise ClosurePreconditionError(f"{u} and {v} are already adjacent")
    if g.degree(u) + g.degree(v) < threshold:
        raise ClosurePreconditionError(
            f"d({u}) + d({v}) = {g.degree(u) + g.degree(v)} is below {threshold}"
        )


def stability_check_lnk(g: Graph, k: int, u: int, v: int) -> bool:
    """Whether adding ``uv`` leaves L_{n,k}-freeness unchanged (it always should)."""
    _check_pair(g, u, v, k)
    return is_lnk_free(g, k) == is_lnk_free(g.add_edge(u, v), k)


def stability_check_matching(g: Graph, k: int, u: int, v: int) -> bool:
    """Whether nu(G + uv) = k + 1 implies nu(G) = k + 1 when d(u) + d(v) >= 2k + 1."""
    _check_pair(g, u, v, 2 * k + 1)
    if matching_number(g.add_edge(u, v)) != k + 1:
        return True
    return matching_number(g) == k + 1
