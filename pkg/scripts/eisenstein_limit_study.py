#!/usr/bin/env python3
"""Deformed Eisenstein series approaching its classical limit.

Evaluates the weight-4 deformed series at z = 2i for increasing p and
prints the gap to the classical q-series value, showing the O(1/p)
approach to the modular object.

Usage: python3 scripts/eisenstein_limit_study.py [--digits 20]
"""

import argparse
import time

from mpmath import mp, mpf, mpc

from koshzeta.ctx import make_context
from koshzeta.eisenstein import eisenstein_deformed, eisenstein_classical


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--digits", type=int, default=20)
    ap.add_argument("--weight", type=int, default=4)
    args = ap.parse_args()

    ctx = make_context(args.digits)
    with ctx.workprec():
        z = mpc(0, 2)
        classical = eisenstein_classical(args.weight, z, ctx)
        print(f"classical value at z=2i: {mp.nstr(classical, 18)}")
        print("p,deformed,gap,seconds")
        for d in (1, 2, 3, 4):
            p = mpf(10) ** d
            t0 = time.time()
            v = eisenstein_deformed(args.weight, p, z, ctx,
                                    abs_tol=mpf("1e-12"))
            print(f"1e{d},{mp.nstr(v, 15)},"
                  f"{mp.nstr(abs(v - classical), 3)},{time.time()-t0:.1f}")


if __name__ == "__main__":
    main()
