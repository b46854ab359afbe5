"""Acceptance suite: one test per criterion, each printing a single
PASS/FAIL line (also collected into the terminal summary).

Run alone with ``pytest tests/test_acceptance.py -s``.
"""

import random
import time
from contextlib import contextmanager
from itertools import combinations
from math import comb

import pytest

from linforest.closure import closure, is_k_closed, k_closure
from linforest.constructions import extremal_lnk, extremal_matching
from linforest.forest import (
    augment_linear_forest,
    is_linear_forest,
    is_lnk_free,
    max_linear_forest,
)
from linforest.formulas import (
    ex_conjecture_r,
    ex_linear_forest,
    ex_matching,
    lnk_clique_branch,
    lnk_join_branch,
)
from linforest.graph import edge_count, from_edge_mask, pair_list
from linforest.hypergraph import (
    brute_ex_tight,
    hyper_witness_text,
    max_tight_forest,
    tight_forest_table,
    triple_list,
)
from linforest.verifier import audit_closed_graph, verify_erdos_gallai, verify_linear_forest

from .conftest import ACCEPTANCE_LINES, random_graph
from .oracles import _is_linear_forest, linear_forest_by_mask, max_tight_forest_by_permutation
from .test_forest import random_augmentation_instance

pytestmark = pytest.mark.slow


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    info = {"detail": ""}
    status = "FAIL"
    try:
        yield info
        status = "PASS"
    finally:
        line = f"[{status}] criterion {number}: {title} ({time.perf_counter() - start:.1f}s)"
        if info["detail"]:
            line += f" -- {info['detail']}"
        ACCEPTANCE_LINES[number] = line
        print("\n" + line)


def test_1_linear_forest_sweep():
    with criterion(1, "exhaustive ex(n; L_{n,k}) = formula, 2 <= n <= 7") as info:
        table = verify_linear_forest(7, method="table")
        bad = [r for r in table.rows if not r.agree]
        assert not bad, bad
        assert len(table.rows) == 21
        # the n = 7 sweep again through the per-graph predicate search
        search = verify_linear_forest(7, method="search", jobs=1)
        assert search.rows == table.rows
        info["detail"] = f"{len(table.rows)} rows, table and search routes identical"


def test_2_matching_sweep():
    with criterion(2, "exhaustive ex(n; M_{k+1}) = formula, k <= 3, n <= 7") as info:
        table = verify_erdos_gallai(7, method="table", k_max=3)
        bad = [r for r in table.rows if not r.agree]
        assert not bad, bad
        search = verify_erdos_gallai(7, method="search", jobs=1, k_max=3)
        assert search.rows == table.rows
        info["detail"] = f"{len(table.rows)} rows, table and search routes identical"


def test_3_formula_identities():
    with criterion(3, "ex(n; L_{n,2k+1}) = ex(n; M_{k+1}) and ex(n; L_{n,n-1}) = C(n-1,2), n <= 200") as info:
        checked = 0
        for n in range(2, 201):
            for k in range(0, (n - 2) // 2 + 1):
                assert ex_linear_forest(n, 2 * k + 1).value == ex_matching(n, k).value, (n, k)
                checked += 1
            assert ex_linear_forest(n, n - 1).value == comb(n - 1, 2), n
            checked += 1
        info["detail"] = f"{checked} identities"


def test_4_extremal_certification():
    with criterion(4, "extremal families free, on their branch, max = formula, n <= 18") as info:
        cases = 0
        for n in range(2, 19):
            for k in range(1, n):
                counts = {}
                for variant in ("clique", "join"):
                    g = extremal_lnk(n, k, variant)
                    assert is_lnk_free(g, k), (n, k, variant)
                    counts[variant] = edge_count(g)
                    cases += 1
                assert counts["clique"] == lnk_clique_branch(n, k)
                assert counts["join"] == lnk_join_branch(n, k)
                assert max(counts.values()) == ex_linear_forest(n, k).value
        info["detail"] = f"{cases} graphs certified"


def test_5_closure_properties():
    with criterion(5, "closure extensive, idempotent, order-free, freeness-preserving") as info:
        rng = random.Random(51)
        checks = 0
        for i in range(1000):
            n = rng.randint(2, 12)
            p = (0.2, 0.5, 0.8)[i % 3]
            g = random_graph(rng, n, p)
            for k in sorted({3, max(n // 2, 1), n}):
                trace = k_closure(g, k)
                cl = trace.final
                assert all(cl.has_edge(u, v) for u, v in g.edges())
                assert k_closure(cl, k).added_edges == ()
                for _ in range(5):
                    assert k_closure(g, k, rng=rng).final == cl
                assert is_lnk_free(g, k) == is_lnk_free(cl, k), (g, k)
                checks += 1
        info["detail"] = f"{checks} (graph, k) pairs, 0 violations"


def test_6_augmentation():
    with criterion(6, "augment_linear_forest returns a valid k-edge linear forest") as info:
        rng = random.Random(61)
        done = 0
        while done < 1000:
            inst = random_augmentation_instance(rng, max_n=12)
            if inst is None:
                continue
            g, forest, u, v = inst
            out = augment_linear_forest(g, forest, u, v)
            assert len(out) == len(forest) + 1
            assert out.is_subgraph_of(g) and is_linear_forest(g.n, out.edges)
            done += 1
        info["detail"] = f"{done} instances, 0 failures"


def _random_closed_free(rng):
    n = rng.randint(3, 12)
    k = rng.randint(1, n - 1)
    g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
    edges = g.edges()
    rng.shuffle(edges)
    # drop edges until free, then close; closure keeps the graph free
    while not is_lnk_free(g, k):
        g = g.remove_edge(*edges.pop())
    return closure(g, k), k


def test_7_proof_audit():
    with criterion(7, "proof-skeleton audit on closed extremal graphs and random closed free graphs") as info:
        audited = 0
        for n in range(2, 15):
            for k in range(1, n):
                for variant in ("clique", "join"):
                    g = closure(extremal_lnk(n, k, variant), k)
                    rec = audit_closed_graph(g, k)
                    assert rec.passed, (n, k, variant, rec)
                    audited += 1
            for k in range(0, n // 2 + 1):
                for variant in ("clique", "join"):
                    if variant == "clique" and n < 2 * k + 1:
                        continue
                    g = closure(extremal_matching(n, k, variant), 2 * k + 1)
                    rec = audit_closed_graph(g, k, family="matching")
                    assert rec.passed, (n, k, variant, rec)
                    audited += 1
        rng = random.Random(71)
        for _ in range(500):
            g, k = _random_closed_free(rng)
            assert is_k_closed(g, k)
            rec = audit_closed_graph(g, k)
            assert rec.passed, (g, k, rec)
            audited += 1
        info["detail"] = f"{audited} audits, 0 violations"


def test_8_conjecture_smallest_case():
    with criterion(8, "tight linear forests in 3-graphs: brute_ex_tight(6, 4) = 10") as info:
        formula = ex_conjecture_r(6, 4, 3).value
        value, witness = brute_ex_tight(6, 4, method="table")
        info["detail"] = f"formula {formula}, exhaustive {value}"
        if value != formula:
            # independent double check before reporting a counterexample
            search_value, search_witness = brute_ex_tight(6, 4, method="search", jobs=1)
            assert search_value == value and search_witness == witness
            assert max_tight_forest_by_permutation(6, witness.edges) < 4
            assert max_tight_forest(6, witness.edges).edge_count < 4
            table = tight_forest_table(6)
            n_bits = len(triple_list(6))
            extremal = [
                m for m in range(1 << n_bits) if table[m] < 4 and bin(m).count("1") == value
            ]
            info["detail"] = (
                f"COUNTEREXAMPLE: formula {formula}, exhaustive {value} "
                f"(table, search and permutation oracle agree; {len(extremal)} labelled "
                f"extremal 3-graphs), witness {hyper_witness_text(witness)}"
            )
        assert value == formula == 10


def test_9_solver_oracle():
    with criterion(9, "max_linear_forest = subset enumeration, every graph with n <= 6") as info:
        graphs = 0
        for n in range(0, 7):
            pairs = pair_list(n)
            oracle = linear_forest_by_mask(n)
            for mask in range(1 << len(pairs)):
                g = from_edge_mask(n, mask)
                assert max_linear_forest(g).value == oracle[mask], (n, mask)
                sub = [p for i, p in enumerate(pairs) if mask >> i & 1]
                assert is_linear_forest(n, sub) == _is_linear_forest(n, sub)
                graphs += 1
        info["detail"] = f"{graphs} labelled graphs"


def test_triples_indexing_matches_combinations():
    assert triple_list(5) == list(combinations(range(5), 3))
