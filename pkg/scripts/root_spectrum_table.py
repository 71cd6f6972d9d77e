#!/usr/bin/env python3
"""Tabulate the root spectrum across the deformation range.

Shows how the roots of p*sin(pi*x) + x*cos(pi*x) migrate from the
half-integer grid (p -> 0) to the integer grid (p -> inf), and how the
spectral weights approach 1.

Usage: python3 scripts/root_spectrum_table.py [--count 12] [--digits 20]
"""

import argparse

from mpmath import mp, mpf

from koshzeta.ctx import make_context
from koshzeta.spectrum import root_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--count", type=int, default=12)
    ap.add_argument("--digits", type=int, default=20)
    args = ap.parse_args()

    ctx = make_context(args.digits)
    ps = ["0.001", "0.1", "1", "10", "1000"]
    tabs = {p: root_table(mpf(p), ctx, count=args.count) for p in ps}

    with ctx.workprec():
        header = "j     " + "".join(f"p={p:<14s}" for p in ps)
        print(header)
        print("-" * len(header))
        for j in range(1, args.count + 1):
            row = f"{j:<6d}"
            for p in ps:
                row += f"{mp.nstr(tabs[p].roots[j - 1], 10):<14s}"
            print(row)
        print()
        print("weights (same layout):")
        for j in range(1, args.count + 1):
            row = f"{j:<6d}"
            for p in ps:
                row += f"{mp.nstr(tabs[p].weights[j - 1], 10):<14s}"
            print(row)


if __name__ == "__main__":
    main()
