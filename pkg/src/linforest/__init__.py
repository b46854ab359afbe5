"""Exact Turán numbers for spanning linear forests, matchings and tight
linear forests in 3-graphs, with the closure tools behind them."""

from .closure import k_closure, is_k_closed
from .constructions import certify, extremal_lnk, extremal_matching
from .forest import (
    LinearForest,
    augment_linear_forest,
    hamiltonian_completion,
    is_hamiltonian,
    is_linear_forest,
    is_lnk_free,
    max_linear_forest,
    max_matching,
)
from .formats import emit_graph6, parse_graph6
from .formulas import ex_conjecture_r, ex_ham_path, ex_linear_forest, ex_matching
from .graph import Graph, complete, disjoint_union, empty, from_edge_list, join

__version__ = "0.1.0"

__all__ = [
    "Graph", "LinearForest",
    "augment_linear_forest", "certify", "complete", "disjoint_union", "emit_graph6", "empty",
    "ex_conjecture_r", "ex_ham_path", "ex_linear_forest", "ex_matching",
    "extremal_lnk", "extremal_matching", "from_edge_list", "hamiltonian_completion",
    "is_hamiltonian", "is_k_closed", "is_linear_forest", "is_lnk_free", "join",
    "k_closure", "max_linear_forest", "max_matching", "parse_graph6",
]
