"""Run every identity suite over a range of degrees and write a timing table.

    python scripts/sweep.py --max-n 6 --out sweep.csv
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from dataclasses import dataclass

from heckez import verify


@dataclass
class SweepConfig:
    min_n: int = 0
    max_n: int = 5
    selector: str = "all"
    out: str | None = None


def sweep(cfg: SweepConfig) -> list[verify.CheckResult]:
    results = []
    for n in range(cfg.min_n, cfg.max_n + 1):
        report = verify.run(n, cfg.selector)
        for line in report.lines():
            print(line, flush=True)
        results.extend(report.results)
    return results


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--min-n", type=int, default=0)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--identity", default="all", choices=verify.selectors())
    p.add_argument("--out", default=None, help="CSV path for per-suite timings")
    a = p.parse_args()
    cfg = SweepConfig(a.min_n, a.max_n, a.identity, a.out)

    start = time.perf_counter()
    results = sweep(cfg)
    total = time.perf_counter() - start
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["identity", "n", "passed", "seconds"])
            for r in results:
                w.writerow([r.identity, r.n, int(r.passed), f"{r.elapsed:.3f}"])
    failed = sum(not r.passed for r in results)
    print(f"{len(results)} suite runs, {failed} failed, {total:.1f}s total")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
