"""Run every verification suite over a parameter grid and write a CSV summary.

    python3 scripts/verify_grid.py --max-m 6 --max-n 6 --jobs 4 --out grid.csv
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from spantree.verify import DEFAULT_SEED, SUITES, run_verification


@dataclass
class GridConfig:
    max_m: int = 6
    max_n: int = 6
    jobs: int = 1
    seed: int = DEFAULT_SEED
    graphs: int = 100
    out: str | None = None


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(GridConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=type(default) if default is not None else str,
                       default=default)
    cfg = GridConfig(**vars(p.parse_args(argv)))

    rows, ok = [], True
    for suite in SUITES:
        start = time.perf_counter()
        report = run_verification(suite, cfg.max_m, cfg.max_n, cfg.jobs, cfg.seed, cfg.graphs)
        elapsed = time.perf_counter() - start
        ok &= report.ok
        for name, (passed, total) in sorted(report.summary().items()):
            rows.append({"suite": suite, "check": name, "passed": passed, "total": total})
        print(f"{suite:9s} {len(report.records):6d} checks  {len(report.failures):3d} failures  {elapsed:6.2f}s")
        for rec in report.failures[:10]:
            print(f"  MISMATCH {rec.name} {rec.params} expected={rec.expected} actual={rec.actual}")

    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=["suite", "check", "passed", "total"])
            writer.writeheader()
            writer.writerows(rows)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
