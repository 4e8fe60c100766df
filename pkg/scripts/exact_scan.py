#!/usr/bin/env python3
"""Resumable exact-oracle scan; rerunning continues where the cache stops."""

import argparse

from purequartic.batch import ScanCache, scan


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--to", type=int, default=10 ** 6)
    ap.add_argument("--cache", default="scan_cache.csv")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    flagged = n = 0
    for rec in scan(3, args.to, exact_limit=args.to, conjecture=True, jobs=args.jobs,
                    cache=ScanCache(args.cache)):
        n += 1
        if rec.flagged:
            flagged += 1
            print("flagged:", rec)
    print(f"{n} records, {flagged} flagged; cache at {args.cache}")


if __name__ == "__main__":
    main()
