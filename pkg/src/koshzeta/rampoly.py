"""Deformed Ramanujan polynomials and their functional equations.

P_k(z) = sum_{j=0}^{2k} B_j B_{2k-j} / (j! (2k-j)!) z^{j-1} with either
Bernoulli family (kind 1 or 2) or the classical numbers (p = None).
The coefficient symmetry c_j = c_{2k-j} gives the exact two-term
relation P(z) = z^{2k-2} P(1/z); the three-term combination
P(z) - P(z-1) + z^{2k-2} P((z-1)/z) equals a correction coefficient
read off a generating function that differs per family.
"""

from __future__ import annotations

from mpmath import mp, mpf, mpc

import mpmath

from .bernoulli import b1_via_series, b2_via_zeta, classical_bernoulli_mpf
from .ctx import NumericContext
from .errors import DomainError
from .pseries import Series, exp_series
from .spectrum import sigma_kernel


def _as_number(z):
    return z if isinstance(z, mpc) else mpf(z)


def bernoulli_list(kind, p, n_max: int, ctx: NumericContext):
    """B_0..B_{n_max} of the requested family (kind None = classical)."""
    with ctx.workprec():
        if kind is None or p is None:
            return [classical_bernoulli_mpf(n) for n in range(n_max + 1)]
        if kind == 1:
            return list(b1_via_series(n_max, p, ctx).values)
        if kind == 2:
            return [b2_via_zeta(n, p, ctx) for n in range(n_max + 1)]
        raise DomainError("kind must be 1, 2, or None for classical")


def ram_poly(k: int, kind, p, z, ctx: NumericContext, bern=None):
    """Evaluate the degree-2k Laurent polynomial at z (z != 0)."""
    if k < 2:
        raise DomainError("order must be >= 2")
    z = _as_number(z)
    if z == 0:
        raise DomainError("z = 0 is the Laurent pole")
    with ctx.workprec():
        if bern is None:
            bern = bernoulli_list(kind, p, 2 * k, ctx)
        acc = mpc(0)
        for j in range(2 * k + 1):
            cj = bern[j] * bern[2 * k - j] / (
                mpmath.factorial(j) * mpmath.factorial(2 * k - j))
            acc += cj * z ** (j - 1)
        return acc


def two_term_residual(k, kind, p, z, ctx: NumericContext, bern=None):
    """P(z) - z^{2k-2} P(1/z); zero up to rounding by symmetry."""
    z = _as_number(z)
    with ctx.workprec():
        if bern is None:
            bern = bernoulli_list(kind, p, 2 * k, ctx)
        return (ram_poly(k, kind, p, z, ctx, bern=bern)
                - z ** (2 * k - 2)
                * ram_poly(k, kind, p, 1 / z, ctx, bern=bern))


def three_term_residual(k, kind, p, z, ctx: NumericContext, bern=None):
    """P(z) - P(z-1) + z^{2k-2} P((z-1)/z) minus the correction term."""
    z = _as_number(z)
    if z == 0 or z == 1:
        raise DomainError("z in {0, 1} hits a Laurent pole")
    with ctx.workprec():
        if bern is None:
            bern = bernoulli_list(kind, p, 2 * k, ctx)
        lhs = (ram_poly(k, kind, p, z, ctx, bern=bern)
               - ram_poly(k, kind, p, z - 1, ctx, bern=bern)
               + z ** (2 * k - 2)
               * ram_poly(k, kind, p, (z - 1) / z, ctx, bern=bern))
        if kind is None or p is None:
            corr = mpf(0)
        elif kind == 1:
            corr = eps1_coeff(k, p, z, ctx)
        else:
            corr = eps2_coeff(k, p, z, ctx, bern=bern)
        return lhs - corr


# ---------------------------------------------------------------------
# correction coefficients
# ---------------------------------------------------------------------

def _gf_denominator(p, order):
    """f(y) = (e^y - 1)(p + y/2pi) + y/pi, valuation 1."""
    from .bernoulli import _denominator_series
    return _denominator_series(p, order)


def eps1_coeff(k: int, p, x, ctx: NumericContext):
    """t^{2k} coefficient of
    x(1-x) t^5 e^{xt} / (4 pi^3 f(t) f(xt) f((x-1)t))."""
    x = _as_number(x)
    if x == 0 or x == 1:
        return mpf(0)
    with ctx.workprec():
        order = 2 * k + 6
        f = _gf_denominator(mpf(p), order + 3)
        fx = f.compose_scale(x)
        fx1 = f.compose_scale(x - 1)
        den = (f * fx) * fx1          # valuation 3
        num = exp_series(order + 3).compose_scale(x).mul_tpow(5)
        num = num * (x * (1 - x) / (4 * mp.pi ** 3))
        quot = num.div(den)
        return quot.c[2 * k] if 2 * k <= quot.order else mpf(0)


def eps2_coeff(k: int, p, x, ctx: NumericContext, bern=None, route="closed"):
    """t^{2k} coefficient of
    t^2 { S(xt)S(t) - S((x-1)t)S(t) + S((x-1)t)S(xt) } where S is the
    spectral heat kernel; closed route expands each factor through the
    second Bernoulli family, fit route samples the kernel numerically.
    """
    x = _as_number(x)
    with ctx.workprec():
        if route == "fit":
            return _eps2_fit(k, mpf(p), x, ctx)
        if bern is None:
            bern = bernoulli_list(2, p, 2 * k, ctx)
        acc = mpc(0)
        for n in range(2 * k + 1):
            cn = bern[n] * bern[2 * k - n] / (
                mpmath.factorial(n) * mpmath.factorial(2 * k - n))
            acc += cn * (x ** (n - 1) - (x - 1) ** (n - 1)
                         + (x - 1) ** (n - 1) * x ** (2 * k - n - 1))
        return acc


def _eps2_fit(k, p, x, ctx):
    """Least-squares fit of the kernel combination on a real-t grid."""
    if not (isinstance(x, mpf) or x.imag == 0):
        raise DomainError("fit route needs real x")
    x = mpf(x.real) if isinstance(x, mpc) else x
    if x <= 1:
        raise DomainError("fit route needs x > 1 (positive kernel args)")
    deg = 2 * k + 4
    npts = 3 * (deg + 1)
    ts = [mpf("0.001") * (mpf(300) ** (mpf(i) / (npts - 1)))
          for i in range(npts)]
    A = mp.matrix(npts, deg + 1)
    b = mp.matrix(npts, 1)
    for i, t in enumerate(ts):
        s1 = sigma_kernel(x * t, p, ctx)
        s2 = sigma_kernel(t, p, ctx)
        s3 = sigma_kernel((x - 1) * t, p, ctx)
        val = t ** 2 * (s1 * s2 - s3 * s2 + s3 * s1)
        for j in range(deg + 1):
            A[i, j] = t ** j
        b[i] = val
    coeffs = mpmath.qr_solve(A, b)[0]
    return coeffs[2 * k]
