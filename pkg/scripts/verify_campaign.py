#!/usr/bin/env python3
"""Run every verification suite up to a limit and write a JSON report."""

import argparse
import json
import sys
import time

from purequartic.batch import verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10 ** 5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--out", default="verify_report.json")
    args = ap.parse_args()

    start = time.perf_counter()
    suites = verify(args.limit, args.seed, args.jobs)
    elapsed = time.perf_counter() - start
    for s in suites:
        print(f"{'PASS' if s.ok else 'FAIL'}  {s.name:<45} {s.checked:>7} checks")
    print(f"{elapsed:.1f}s")
    with open(args.out, "w") as fh:
        json.dump({"limit": args.limit, "seed": args.seed, "suites": [s.as_dict() for s in suites]}, fh, indent=1)
    sys.exit(0 if all(s.ok for s in suites) else 1)


if __name__ == "__main__":
    main()
