import random
from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings

from linforest.formats import (
    emit_edge_list,
    emit_graph6,
    emit_triples,
    parse_edge_list,
    parse_graph6,
    parse_triples,
)
from linforest.graph import GraphError, complete, empty, from_edge_list, pair_list

from .conftest import graphs


def _all_graphs(n):
    pairs = pair_list(n)
    for keep in product([False, True], repeat=len(pairs)):
        yield from_edge_list(n, [p for p, k in zip(pairs, keep) if k])


@pytest.mark.parametrize("n", range(0, 6))
def test_graph6_matches_networkx_on_all_small_graphs(n):
    for g in _all_graphs(n):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(g.edges())
        expected = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert emit_graph6(g) == expected
        assert parse_graph6(expected) == g


def test_graph6_hand_encoded():
    assert emit_graph6(empty(1)) == "@"
    assert emit_graph6(complete(4)) == "C~"
    assert parse_graph6(emit_graph6(complete(4))) == complete(4)
    assert emit_graph6(complete(5)) == "D~{"


def test_graph6_accepts_header():
    assert parse_graph6(">>graph6<<C~") == complete(4)


@pytest.mark.parametrize("text", ["", "D~", "D~{{", "C\x7f", "~", "A`"])
def test_graph6_malformed(text):
    # "A`" sets a padding bit
    with pytest.raises(GraphError):
        parse_graph6(text)


def test_graph6_size_limit():
    with pytest.raises(GraphError):
        emit_graph6(empty(63))
    assert parse_graph6(emit_graph6(complete(62))) == complete(62)


@given(graphs(max_n=30))
@settings(max_examples=1000)
def test_graph6_round_trip(g):
    text = emit_graph6(g)
    assert parse_graph6(text) == g
    assert emit_graph6(parse_graph6(text)) == text


def test_edge_list_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(0, 15)
        g = from_edge_list(n, [e for e in pair_list(n) if rng.random() < 0.4])
        assert parse_edge_list(emit_edge_list(g)) == g


def test_edge_list_format():
    g = from_edge_list(3, [(1, 2), (0, 1)])
    assert emit_edge_list(g) == "3 2\n0 1\n1 2\n"


@pytest.mark.parametrize("text", ["", "3\n", "3 1\n", "3 1\n0 x\n", "3 1\n0 3\n", "3 1\n0 1 2\n"])
def test_edge_list_malformed(text):
    with pytest.raises(GraphError):
        parse_edge_list(text)


def test_triples_round_trip():
    text = emit_triples(6, [(2, 1, 0), (3, 4, 5)])
    assert text == "6 2\n0 1 2\n3 4 5\n"
    assert parse_triples(text) == (6, [(0, 1, 2), (3, 4, 5)])
