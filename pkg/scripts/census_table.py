#!/usr/bin/env python3
"""Print the p = 15 mod 32 census and density ratios at decade checkpoints."""

import argparse

from purequartic.batch import census, density_table, symbol_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--limit", type=int, default=10 ** 6)
    args = ap.parse_args()

    table = symbol_table(args.limit + 1)
    rep = census(args.limit, table)
    print(f"primes p < {args.limit}, p = 15 mod 32: {rep.count_15mod32}")
    print(f"  (2u/v) = -1: {rep.count_inv_minus}   (4 || h_K if the conjecture holds)")
    print(f"  (2u/v) = +1: {rep.count_inv_plus}   (8 | h_K if the conjecture holds)")
    print()

    checkpoints = []
    c = 1000
    while c <= args.limit:
        checkpoints.append(c)
        c *= 10
    header = f"{'X':>9} {'#15mod16':>9} {'inv=-1':>8} {'twist=-1':>9} {'q2 1mod16':>10} {'8||h 15/32':>11} {'8||h 31/32':>11}"
    print(header)
    for r in density_table(args.limit, checkpoints, table):
        print(f"{r.checkpoint:>9} {r.n_15mod16:>9} {r.inv_minus:>8.4f} {r.twisted_minus:>9.4f} "
              f"{r.quartic2_minus_1mod16:>10.4f} {r.h2p_ord3_15mod32:>11.4f} {r.h2p_ord3_31mod32:>11.4f}")
    print(f"{'limit':>9} {'':>9} {0.5:>8.4f} {0.5:>9.4f} {1 / 16:>10.4f} {0.5:>11.4f} {0.5:>11.4f}")


if __name__ == "__main__":
    main()
