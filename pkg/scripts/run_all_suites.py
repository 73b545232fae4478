#!/usr/bin/env python3
"""Run every verification suite at its default caps and print a one-line summary per suite.

Usage: python3 scripts/run_all_suites.py [--seed S] [--json]
Exit status is 1 if any suite records a failure.
"""

import argparse
import json
import sys

from symplectic_ice.verify import SUITES, SuiteSpec, run_suite


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--json", action="store_true", help="one JSON report per line")
    args = ap.parse_args()

    failed = 0
    for name in SUITES:
        report = run_suite(SuiteSpec(name, seed=args.seed))
        failed += not report.passed
        if args.json:
            print(json.dumps(report.to_json_dict()))
        else:
            status = "PASS" if report.passed else f"FAIL ({len(report.failures)})"
            print(f"{name:<12} {report.instances_checked:>6} instances  {report.elapsed_ms:9.1f} ms  {status}")
            for note in report.notes:
                print(f"{'':<12} {note}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
