"""Command-line front end.

    linforest formula lnk --n 10 --k 5
    linforest solve maxlf --g6 'D~{'
    linforest closure --k 4 --edges c5.txt
    linforest extremal lnk --n 6 --k 5 --variant join
    linforest verify lnk --n-max 6

Exit status: 0 success, 1 a verification row disagrees, 2 invalid input,
3 instance above a solver cap.
"""

from __future__ import annotations

import argparse
import sys

from . import constructions, formulas, hypergraph, verifier
from .closure import k_closure
from .forest import SizeCapError, hamiltonian_completion, is_hamiltonian, max_linear_forest, max_matching
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graph import GraphError
from .sweep import default_jobs

EXIT_DISAGREE, EXIT_INPUT, EXIT_CAP = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_graph_source(p):
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--g6", help="graph in graph6 format")
    src.add_argument("--edges", help="file in 'n m' edge-list format")


def _load_graph(args):
    if args.g6 is not None:
        return parse_graph6(args.g6)
    try:
        with open(args.edges) as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise GraphError(f"cannot read {args.edges}: {exc.strerror}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linforest", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("formula", help="evaluate a closed-form Turán number")
    p.add_argument("subject", choices=["lnk", "matching", "hampath", "conjecture"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int, default=3)

    p = sub.add_parser("solve", help="run an exact solver on one graph")
    p.add_argument("task", choices=["maxlf", "matching", "hcn", "hamiltonian"])
    _add_graph_source(p)

    p = sub.add_parser("closure", help="k-closure with its edge trace")
    p.add_argument("--k", type=int, required=True)
    _add_graph_source(p)

    p = sub.add_parser("extremal", help="print an extremal construction as graph6")
    p.add_argument("subject", choices=["lnk", "matching"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--variant", required=True)

    p = sub.add_parser("verify", help="exhaustive check of a formula, TSV on stdout")
    p.add_argument("subject", choices=["lnk", "matching", "conjecture"])
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--n", type=int, help="conjecture: vertex count")
    p.add_argument("--k", type=int, help="conjecture: edge threshold")
    p.add_argument("--r", type=int, default=3, help="conjecture: uniformity (2 or 3)")
    p.add_argument("--method", choices=verifier.METHODS, default="table")
    p.add_argument("--jobs", type=int, default=default_jobs())
    return parser


def cmd_formula(args) -> int:
    if args.subject == "hampath":
        print(formulas.ex_ham_path(args.n))
        return 0
    if args.k is None:
        raise formulas.FormulaRangeError("--k is required")
    if args.subject == "lnk":
        value = formulas.ex_linear_forest(args.n, args.k)
    elif args.subject == "matching":
        value = formulas.ex_matching(args.n, args.k)
    else:
        value = formulas.ex_conjecture_r(args.n, args.k, args.r)
    print(f"{value.value}\t{value.attained_by}")
    return 0


def _print_edges(edges):
    for u, v in sorted(edges):
        print(f"{u} {v}")


def cmd_solve(args) -> int:
    g = _load_graph(args)
    if args.task == "maxlf":
        result = max_linear_forest(g)
        print(result.value)
        _print_edges(result.witness)
    elif args.task == "matching":
        result = max_matching(g)
        print(result.value)
        _print_edges(result.witness)
    elif args.task == "hcn":
        print(hamiltonian_completion(g))
    else:
        print("true" if is_hamiltonian(g) else "false")
    return 0


def cmd_closure(args) -> int:
    trace = k_closure(_load_graph(args), args.k)
    print(emit_graph6(trace.final))
    _print_edges(trace.added_edges)
    return 0


def cmd_extremal(args) -> int:
    build = constructions.extremal_lnk if args.subject == "lnk" else constructions.extremal_matching
    print(emit_graph6(build(args.n, args.k, args.variant)))
    return 0


def cmd_verify(args) -> int:
    if args.subject == "lnk":
        report = verifier.verify_linear_forest(args.n_max, method=args.method, jobs=args.jobs)
    elif args.subject == "matching":
        report = verifier.verify_erdos_gallai(args.n_max, method=args.method, jobs=args.jobs)
    else:
        if args.n is None or args.k is None:
            raise formulas.FormulaRangeError("verify conjecture needs --n and --k")
        report = hypergraph.verify_conjecture(
            args.n, args.k, r=args.r, method=args.method, jobs=args.jobs
        )
    sys.stdout.write(report.to_tsv())
    bad = [row for row in report.rows if not row.agree]
    print(
        f"{len(report.rows)} rows, {len(bad)} disagreeing, "
        f"{report.graphs_scanned} structures scanned in {report.elapsed:.2f}s",
        file=sys.stderr,
    )
    for row in bad:
        kind = "COUNTEREXAMPLE" if args.subject == "conjecture" else "MISMATCH"
        print(
            f"{kind}: n={row.n} k={row.k} formula={row.formula} "
            f"exhaustive={row.brute} witness={row.witness}",
            file=sys.stderr,
        )
    return EXIT_DISAGREE if bad else 0


COMMANDS = {
    "formula": cmd_formula,
    "solve": cmd_solve,
    "closure": cmd_closure,
    "extremal": cmd_extremal,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except SizeCapError as exc:
        print(f"linforest: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"linforest: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
