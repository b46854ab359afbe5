"""Run every exhaustive sweep and write the TSV reports to one directory.

    python3 scripts/reproduce_sweeps.py --out reports --n-max 7 --method table
"""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from linforest.hypergraph import verify_conjecture
from linforest.verifier import verify_erdos_gallai, verify_linear_forest


@dataclass(frozen=True)
class SweepConfig:
    out: Path = Path("reports")
    n_max: int = 7
    matching_k_max: int = 3
    method: str = "table"
    jobs: int = 1
    conjecture: tuple[tuple[int, int, int], ...] = ((6, 4, 3), (5, 3, 2), (7, 5, 2))


def run(cfg: SweepConfig) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    reports = {
        "linear_forest.tsv": verify_linear_forest(cfg.n_max, cfg.method, cfg.jobs),
        "matching.tsv": verify_erdos_gallai(cfg.n_max, cfg.method, cfg.jobs, cfg.matching_k_max),
    }
    for n, k, r in cfg.conjecture:
        reports[f"tight_r{r}_n{n}_k{k}.tsv"] = verify_conjecture(n, k, r, cfg.method, cfg.jobs)
    failures = 0
    for name, report in reports.items():
        (cfg.out / name).write_text(report.to_tsv())
        bad = [row for row in report.rows if not row.agree]
        failures += len(bad)
        print(f"{name}: {len(report.rows)} rows, {len(bad)} disagreeing, {report.elapsed:.1f}s")
        for row in bad:
            print(f"  n={row.n} k={row.k} formula={row.formula} exhaustive={row.brute} {row.witness}")
    return 1 if failures else 0


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    p.add_argument("--out", type=Path, default=SweepConfig.out)
    p.add_argument("--n-max", type=int, default=SweepConfig.n_max)
    p.add_argument("--method", choices=["table", "search"], default=SweepConfig.method)
    p.add_argument("--jobs", type=int, default=SweepConfig.jobs)
    a = p.parse_args(argv)
    return run(SweepConfig(out=a.out, n_max=a.n_max, method=a.method, jobs=a.jobs))


if __name__ == "__main__":
    sys.exit(main())
