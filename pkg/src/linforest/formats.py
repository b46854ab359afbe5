"""Text formats: graph6, the ``n m`` edge-list format, and 3-graph edge lists."""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Graph, GraphError, from_edge_list

GRAPH6_MAX_N = 62


def emit_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise GraphError(f"graph6 output supports n <= {GRAPH6_MAX_N}, got {g.n}")
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for b in bits[start:start + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def parse_graph6(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise GraphError("empty graph6 string")
    codes = [ord(c) - 63 for c in text]
    if any(not 0 <= c <= 63 for c in codes):
        raise GraphError("graph6 string contains a byte outside 63..126")
    n = codes[0]
    if n == 63:
        raise GraphError(f"graph6 header for n > {GRAPH6_MAX_N} is not supported")
    nbits = n * (n - 1) // 2
    body = codes[1:]
    if len(body) != (nbits + 5) // 6:
        raise GraphError(
            f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}"
        )
    bits = [(c >> (5 - i)) & 1 for c in body for i in range(6)]
    if any(bits[nbits:]):
        raise GraphError("graph6 padding bits are not zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _ints(row: list[str]) -> list[int]:
    try:
        return [int(t) for t in row]
    except ValueError:
        raise GraphError(f"non-integer token in line {' '.join(row)!r}") from None


def parse_edge_list(text: str) -> Graph:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with a line 'n m'")
    n, m = _ints(rows[0])
    if any(len(row) != 2 for row in rows[1:]):
        raise GraphError("every edge line must hold exactly two vertices")
    if len(rows) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(rows) - 1}")
    return from_edge_list(n, [tuple(_ints(row)) for row in rows[1:]])


def read_edge_list(stream: TextIO) -> Graph:
    return parse_edge_list(stream.read())


def emit_triples(n: int, edges: Iterable[Iterable[int]]) -> str:
    rows = sorted(tuple(sorted(e)) for e in edges)
    lines = [f"{n} {len(rows)}"] + [" ".join(map(str, r)) for r in rows]
    return "\n".join(lines) + "\n"


def parse_triples(text: str) -> tuple[int, list[tuple[int, ...]]]:
    tokens = [line.split() for line in text.splitlines() if line.strip()]
    if not tokens or len(tokens[0]) != 2:
        raise GraphError("hypergraph file must start with a line 'n m'")
    n, m = _ints(tokens[0])
    rows = [tuple(_ints(row)) for row in tokens[1:]]
    if len(rows) != m:
        raise GraphError(f"header announces {m} edges, found {len(rows)}")
    return n, rows
