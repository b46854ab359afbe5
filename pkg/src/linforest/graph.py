"""Immutable labeled simple graphs on at most 64 vertices.

Adjacency is stored as one integer bit mask per vertex. Vertex sets are plain
``int`` bit masks as well; helpers here accept either a mask or an iterable of
vertices wherever a set is expected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_VERTICES = 64

VertexSet = int


class GraphError(ValueError):
    """Invalid graph construction or malformed graph input."""


def vertex_set(vertices: Iterable[int] | int) -> VertexSet:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: VertexSet) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in members(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(row) for row in self.adj]

    def add_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def remove_edge(self, u: int, v: int) -> Graph:
        _check_pair(self.n, u, v)
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def induced(self, subset: Iterable[int] | VertexSet) -> Graph:
        """Induced subgraph, relabelled to 0..|subset|-1 in increasing order."""
        keep = list(members(vertex_set(subset)))
        index = {v: i for i, v in enumerate(keep)}
        return from_edge_list(
            len(keep),
            [(index[u], index[v]) for u, v in self.edges() if u in index and v in index],
        )


def _check_pair(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
    if u == v:
        raise GraphError(f"loop edge ({u}, {v})")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
    adj = [0] * n
    for u, v in edges:
        _check_pair(n, u, v)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def edge_count(g: Graph) -> int:
    return sum(popcount(row) for row in g.adj) // 2


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def degree_in(g: Graph, v: int, s: Iterable[int] | VertexSet) -> int:
    """Number of neighbours of ``v`` inside ``s``."""
    return popcount(g.adj[v] & vertex_set(s))


def edges_within(g: Graph, s: Iterable[int] | VertexSet) -> int:
    s = vertex_set(s) & g.vertices
    return sum(popcount(g.adj[v] & s) for v in members(s)) // 2


def edges_between(g: Graph, s: Iterable[int] | VertexSet, t: Iterable[int] | VertexSet) -> int:
    s, t = vertex_set(s), vertex_set(t)
    if s & t:
        raise GraphError("edges_between needs disjoint vertex sets")
    return sum(popcount(g.adj[v] & t) for v in members(s & g.vertices))


def complete(s: int) -> Graph:
    full = (1 << s) - 1
    return Graph(s, tuple(full & ~(1 << v) for v in range(s)))


def empty(s: int) -> Graph:
    return Graph(s, (0,) * s)


def disjoint_union(h1: Graph, h2: Graph) -> Graph:
    """``h1`` on vertices 0..n1-1 followed by ``h2`` shifted by n1."""
    n = h1.n + h2.n
    if n > MAX_VERTICES:
        raise GraphError(f"union has {n} vertices, above the cap of {MAX_VERTICES}")
    return Graph(n, h1.adj + tuple(row << h1.n for row in h2.adj))


def join(h1: Graph, h2: Graph) -> Graph:
    n = h1.n + h2.n
    if n > MAX_VERTICES:
        raise GraphError(f"join has {n} vertices, above the cap of {MAX_VERTICES}")
    left = h1.vertices
    right = h2.vertices << h1.n
    adj = tuple(row | right for row in h1.adj) + tuple((row << h1.n) | left for row in h2.adj)
    return Graph(n, adj)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


# Edge-mask encoding used by the exhaustive sweeps: bit i is the i-th pair
# (u, v), u < v, in lexicographic order.

def pair_list(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def from_edge_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    for i, (u, v) in enumerate(pair_list(n)):
        if mask >> i & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def to_edge_mask(g: Graph) -> int:
    mask = 0
    for i, (u, v) in enumerate(pair_list(g.n)):
        if g.adj[u] >> v & 1:
            mask |= 1 << i
    return mask
