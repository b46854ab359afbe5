import random

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from linforest.graph import Graph, from_edge_list, pair_list

# brute-force oracles are slow by design
settings.register_profile("linforest", deadline=None)
settings.load_profile("linforest")


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    pairs = pair_list(n)
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [p for p, k in zip(pairs, keep) if k])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edge_list(n, [e for e in pair_list(n) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20181)


# one summary line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
