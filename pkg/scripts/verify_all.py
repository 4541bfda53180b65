#!/usr/bin/env python3
"""Sweep the verifier over a parameter grid and summarize the outcomes.

Runs the end-to-end identity check (optionally every intermediate step) for
each (r, n) pair and prints one status line per report; a JSON dump of all
reports can be written with --json.

Usage:
    python scripts/verify_all.py
    python scripts/verify_all.py --max-r 3 --max-n 4 --all-steps --json reports.json
"""

import argparse
import json
import sys
import time

from wreath_identity.cli import all_step_tasks
from wreath_identity.identity import verify_theorem


def parse_args():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-r", type=int, default=3)
    parser.add_argument("--max-n", type=int, default=4)
    parser.add_argument("--t-cap", type=int, default=None, help="default n+3 per case")
    parser.add_argument("--all-steps", action="store_true")
    parser.add_argument("--json", default=None, help="write all reports to this path")
    return parser.parse_args()


def main():
    args = parse_args()
    all_reports = []
    failed = 0
    started = time.perf_counter()
    for r in range(1, args.max_r + 1):
        for n in range(1, args.max_n + 1):
            cap = args.t_cap if args.t_cap is not None else n + 3
            if args.all_steps:
                reports = [task() for task in all_step_tasks(r, n, cap, 10_000_000)]
            else:
                reports = [verify_theorem(r, n, cap)]
            for report in reports:
                all_reports.append(report.to_dict())
                mark = "ok " if report.ok else "FAIL"
                failed += not report.ok
                print(
                    f"[{mark}] r={r} n={n} {report.claim:<24} "
                    f"{report.elapsed_ms:8.1f} ms"
                )
    elapsed = time.perf_counter() - started
    print(f"{len(all_reports)} reports, {failed} failures, {elapsed:.1f}s total")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as handle:
            json.dump(all_reports, handle, indent=2)
        print(f"wrote {args.json}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
