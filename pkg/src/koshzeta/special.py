"""Gamma and confluent hypergeometric support.

gamma() delegates to mpmath (which already honours arbitrary digit
requests); the Kummer functions are implemented here because the bracket
kernel's finite-sum route needs U at parameter combinations (integer
second parameter, negative first parameter) where we want full control
over the limit handling.
"""

from __future__ import annotations

from mpmath import mp, mpf, mpc

import mpmath

from .ctx import NumericContext
from .errors import NonConvergenceError
from .quadrature import integrate_semiaxis


def gamma(z, ctx: NumericContext):
    """Gamma function at the context precision."""
    with ctx.workprec():
        return mpmath.gamma(z)


def rgamma(z, ctx: NumericContext):
    """Reciprocal gamma (finite at the poles)."""
    with ctx.workprec():
        return mpmath.rgamma(z)


def kummer_M(a, b, z, ctx: NumericContext, max_terms=None):
    """Confluent hypergeometric M(a;b;z) by direct series.

    Tracks the largest partial sum; if cancellation eats more than the
    guard digits the whole evaluation is retried at higher precision.
    """
    max_terms = max_terms or 40 * ctx.series_terms
    for boost in (0, ctx.digits, 3 * ctx.digits):
        with ctx.workprec(boost):
            tol = mpf(10) ** (-(ctx.digits + 5))
            term = mpc(1)
            total = mpc(1)
            peak = mpf(1)
            n = 0
            ok = False
            while n < max_terms:
                term = term * (a + n) / ((b + n) * (n + 1)) * z
                total += term
                peak = max(peak, abs(total))
                n += 1
                if abs(term) < tol * max(abs(total), mpf(1)) and n > 4:
                    ok = True
                    break
            if not ok:
                raise NonConvergenceError(
                    f"kummer_M series stalled at {max_terms} terms", best=total
                )
            # cancellation audit: lost digits = log10(peak/|total|)
            lost = mp.log10(peak / max(abs(total), mpf(10) ** (-mp.dps)))
            if lost < boost + 4:
                return total if _any_complex(a, b, z) else total.real
    raise NonConvergenceError("kummer_M cancellation exceeded precision boosts")


def _any_complex(*vals):
    return any(isinstance(v, mpc) and v.imag != 0 for v in vals)


def _kummer_U_integral(a, b, z, ctx: NumericContext):
    # U(a;b;z) = (1/Gamma(a)) * int_0^inf e^{-z t} t^{a-1} (1+t)^{b-a-1} dt
    with ctx.workprec():
        def f(t):
            return mp.e ** (-z * t) * t ** (a - 1) * (1 + t) ** (b - a - 1)
        val = integrate_semiaxis(f, ctx, split_points=[1])
        return val / mpmath.gamma(a)


def _kummer_U_connection(a, b, z, ctx: NumericContext):
    # two-M linear combination, valid away from integer b
    with ctx.workprec():
        t1 = mpmath.gamma(1 - b) * mpmath.rgamma(a - b + 1) * kummer_M(a, b, z, ctx)
        t2 = (mpmath.gamma(b - 1) * mpmath.rgamma(a)
              * z ** (1 - b) * mp.e ** z * kummer_M(1 - a, 2 - b, -z, ctx))
        return t1 + t2


def _kummer_U_asymptotic(a, b, z, ctx: NumericContext):
    """Large-|z| expansion z^-a sum_n (a)_n (a-b+1)_n / (n! (-z)^n).

    Divergent in general; summed to the smallest term with the usual
    error bound (first omitted term).  The caller guarantees |z| is
    large enough that the bound is below the working tolerance.
    """
    total = mpc(1)
    term = mpc(1)
    best = abs(term)
    tol = mpf(10) ** (-(mp.dps + 2))
    for n in range(1, 4 * mp.dps + 40):
        term = term * (a + n - 1) * (a - b + n) / (n * (-z))
        if abs(term) > best:
            break
        total += term
        best = abs(term)
        if best < tol * max(1, abs(total)):
            break
    else:
        raise NonConvergenceError("U asymptotic series did not settle")
    if best > mpf(10) ** (-(mp.dps - 8)) * max(1, abs(total)):
        raise NonConvergenceError(
            "U asymptotic series stalled above tolerance", achieved=best)
    return z ** (-a) * total


def kummer_U(a, b, z, ctx: NumericContext):
    """Confluent hypergeometric U(a;b;z) for Re(z) > 0.

    Route: Laplace integral when Re(a) > 0, else the two-M connection
    formula.  Near integer b the connection formula degenerates, so the
    value is obtained from symmetric offsets b +/- eps at two scales and
    Richardson-extrapolated (U is analytic in b; the offsets cancel the
    simple-pole artefacts of the two gamma prefactors).
    """
    with ctx.workprec():
        a, b, z = mpc(a), mpc(b), mpc(z)
        big = 2 * (mpf("1.3") * mp.dps + abs(a) + abs(a - b + 1) + 10) ** 2
        if abs(z) > big:
            out = _kummer_U_asymptotic(a, b, z, ctx)
        elif mpf(a.real) > 0:
            out = _kummer_U_integral(a, b, z, ctx)
        else:
            near = abs(b - mpmath.nint(b.real)) < mpf(10) ** (-(ctx.digits // 2))
            if not near:
                out = _kummer_U_connection(a, b, z, ctx)
            else:
                bb = mpmath.nint(b.real)
                eps = mpf(10) ** (-(ctx.digits // 3))
                # the connection terms individually blow up like 1/eps, so
                # the offset evaluations run with enough slack to absorb it
                boosted = ctx.spawn(2 * ctx.digits)
                with ctx.workprec(ctx.digits + 10):
                    def sym(e):
                        return (_kummer_U_connection(a, bb + e, z, boosted)
                                + _kummer_U_connection(a, bb - e, z, boosted)) / 2
                    v1 = sym(eps)        # U + C eps^2 + O(eps^4)
                    v2 = sym(eps / 2)    # U + C eps^2/4
                    out = (4 * v2 - v1) / 3
        if not _any_complex(a, b, z):
            out = out.real if isinstance(out, mpc) else out
        return out
