"""Cross-check every (q, n, d) whose brute-force scan fits the oracle budget.

    python scripts/oracle_sweep.py --orders 2 3 4 5 --max-n 5 [--json]
"""

import argparse
import sys
import time

from grassfq.field import field_of_order
from grassfq.oracle import cross_check, resolve_budget


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--orders", type=int, nargs="+", default=[2, 3, 4, 5])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--budget", type=int, default=None)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()

    budget = resolve_budget(args.budget)
    failures = 0
    for q in args.orders:
        f = field_of_order(q)
        for n in range(args.max_n + 1):
            for d in range(n + 1):
                if q ** (d * n) > budget:
                    continue
                t0 = time.perf_counter()
                report = cross_check(f, n, d, budget=budget)
                failures += not report.passed
                if args.json:
                    print(report.to_json_text())
                else:
                    print(f"{report.to_text()}  [{time.perf_counter() - t0:.2f}s]")
    sys.exit(3 if failures else 0)


if __name__ == "__main__":
    main()
