"""Command-line interface: root tables, point evaluation, verification.

Exit codes: 0 on success, 1 on a numerical failure (non-convergence or a
failing verification check), 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import sys

import mpmath
from mpmath import mp, mpf, mpc

from .ctx import make_context
from .errors import DomainError, NonConvergenceError, KoshzetaError
from .spectrum import root_table
from .bracket import bracket_kummer, exp_p_mellin
from .zeta import zeta_deformed, eta_deformed
from .bernoulli import b2_via_zeta, b1_via_series
from .omega import omega_sum, weighted_sum
from .rampoly import ram_poly
from .eisenstein import eisenstein_deformed
from . import verify as verify_mod


def _parse_number(txt):
    """Accept real or complex literals like '2.5', '2+3j', '(0,1.3)'."""
    txt = txt.strip()
    if txt.startswith("(") and txt.endswith(")") and "," in txt:
        re_s, im_s = txt[1:-1].split(",")
        return mpc(mpf(re_s), mpf(im_s))
    try:
        return mpf(txt)
    except ValueError:
        return mpc(complex(txt.replace("i", "j")))


def _fmt(v, digits):
    if isinstance(v, mpc) and v.imag != 0:
        return mp.nstr(v, digits)
    return mp.nstr(mpc(v).real, digits)


def cmd_roots(args):
    ctx = make_context(args.digits)
    tab = root_table(mpf(args.p), ctx, count=args.count)
    with ctx.workprec():
        for j in range(1, args.count + 1):
            print(f"{j}\t{mp.nstr(tab.roots[j - 1], args.digits)}\t"
                  f"{mp.nstr(tab.weights[j - 1], args.digits)}")
    return 0


def cmd_eval(args):
    ctx = make_context(args.digits)
    p = mpf(args.p)
    s = _parse_number(args.point)
    tol = mpf(args.tol) if args.tol else None
    with ctx.workprec():
        fn = args.function
        if fn == "zeta":
            v = zeta_deformed(s, p, ctx)
        elif fn == "eta":
            v = eta_deformed(s, p, ctx, abs_tol=tol)
        elif fn == "bracket":
            v = bracket_kummer(s, args.k, p, ctx)
        elif fn == "exp":
            v = exp_p_mellin(s, mpf(args.z), args.k, p, ctx)
        elif fn == "omega":
            v = omega_sum(s, args.m, p, ctx, abs_tol=tol)
        elif fn == "weighted-sum":
            v = weighted_sum(s, args.m, p, ctx, abs_tol=tol)
        elif fn == "eisenstein":
            v = eisenstein_deformed(args.weight, p, s, ctx, abs_tol=tol)
        elif fn == "rampoly":
            v = ram_poly(args.k, args.kind, p, s, ctx)
        elif fn == "bernoulli":
            n = int(s.real if isinstance(s, mpc) else s)
            if args.kind == 2:
                v = b2_via_zeta(n, p, ctx)
            else:
                v = b1_via_series(n, p, ctx).values[n]
        else:
            raise DomainError(f"unknown function {fn!r}")
        print(_fmt(v, args.digits))
    return 0


def cmd_verify(args):
    only = args.only.split(",") if args.only else None

    def progress(msg):
        if not args.quiet:
            print(msg, file=sys.stderr, flush=True)

    report = verify_mod.run_all(args.profile, only=only, progress=progress)
    if args.json or args.out:
        text = report.to_json()
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text + "\n")
        if args.json:
            print(text)
    if args.csv:
        with open(args.csv, "w") as fh:
            fh.write(report.to_csv())
    if not args.json:
        for c in report.checks:
            mark = {"pass": "ok  ", "fail": "FAIL", "error": "ERR "}[c.status]
            print(f"{mark} {c.id:45s} abs={c.abs_residual:9.2e} "
                  f"rel={c.rel_residual:9.2e} tol={c.tol:8.1e}")
        s = report.summary
        print(f"{s['passed']}/{s['total']} passed, {s['failed']} failed, "
              f"{s['errors']} errors")
    return 0 if report.ok else 1


def build_parser():
    ap = argparse.ArgumentParser(
        prog="koshzeta",
        description="Deformed zeta pair, weighted exponential sums, "
                    "generalized Bernoulli numbers, and their identities "
                    "at configurable precision.")
    ap.add_argument("--digits", type=int, default=30,
                    help="decimal digits of working precision (default 30)")
    sub = ap.add_subparsers(dest="command", required=True)

    pr = sub.add_parser("roots", help="tabulate the root spectrum")
    pr.add_argument("--p", default="1", help="deformation parameter")
    pr.add_argument("--count", "--terms", type=int, default=20,
                    dest="count", help="number of roots")
    pr.set_defaults(func=cmd_roots)

    pe = sub.add_parser("eval", help="evaluate one function at one point")
    pe.add_argument("function",
                    choices=["zeta", "eta", "bracket", "exp", "omega",
                             "weighted-sum", "eisenstein", "rampoly",
                             "bernoulli"])
    pe.add_argument("point",
                    help="argument: real, complex '2+3j', or '(re,im)'")
    pe.add_argument("--p", default="1", help="deformation parameter")
    pe.add_argument("--k", type=int, default=1, help="index k where needed")
    pe.add_argument("--m", type=int, default=1, help="order m where needed")
    pe.add_argument("--z", default="1", help="second argument for exp")
    pe.add_argument("--kind", type=int, default=2, choices=[1, 2],
                    help="Bernoulli family (1 or 2)")
    pe.add_argument("--weight", type=int, default=4,
                    help="Eisenstein weight")
    pe.add_argument("--tol", default=None, help="absolute tolerance")
    pe.set_defaults(func=cmd_eval)

    pv = sub.add_parser("verify", help="run the identity check registry")
    pv.add_argument("--profile", default="standard",
                    choices=sorted(verify_mod.PROFILES))
    pv.add_argument("--only", default=None,
                    help="comma-separated family-name filters")
    pv.add_argument("--json", action="store_true",
                    help="print the JSON report to stdout")
    pv.add_argument("--csv", default=None, metavar="PATH",
                    help="also write a CSV report")
    pv.add_argument("--out", default=None, metavar="PATH",
                    help="write the JSON report to a file")
    pv.add_argument("--quiet", action="store_true",
                    help="suppress progress lines on stderr")
    pv.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except NonConvergenceError as exc:
        print(f"did not converge: {exc}", file=sys.stderr)
        return 1
    except KoshzetaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
