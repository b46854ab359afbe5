"""Print every labelled 3-graph on 6 vertices with 11 edges and no tight
linear forest of 4 edges, grouped by the 3-set A whose pairs they cover."""

from itertools import combinations

from linforest.formulas import ex_conjecture_r
from linforest.hypergraph import tight_forest_table, triple_list


def main() -> None:
    triples = triple_list(6)
    table = tight_forest_table(6)
    best = max(bin(m).count("1") for m in range(1 << len(triples)) if table[m] < 4)
    hits = [m for m in range(1 << len(triples)) if table[m] < 4 and bin(m).count("1") == best]
    print(f"conjectured value {ex_conjecture_r(6, 4, 3).value}, exhaustive maximum {best}")
    print(f"{len(hits)} labelled extremal 3-graphs")
    for m in hits:
        edges = [t for i, t in enumerate(triples) if m >> i & 1]
        a = next(
            s for s in combinations(range(6), 3)
            if sum(len(set(e) & set(s)) >= 2 for e in edges) == 10
        )
        print(f"A={''.join(map(str, a))}  " + ",".join("".join(map(str, e)) for e in edges))


if __name__ == "__main__":
    main()
