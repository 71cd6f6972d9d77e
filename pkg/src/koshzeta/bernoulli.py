"""Two families of deformed Bernoulli numbers, each by independent routes.

First kind (attached to the spectral zeta): generating function
    t / (sigma(t/2pi) e^t - 1) = t (p - t/2pi) / f(t),
    f(y) = (e^y - 1)(p + y/2pi) + y/pi,
with B_0 = 1/(1 + 1/(pi p)), and the integral route
    B_{2m} = (-1)^{m+1} 4m Integral_0^inf x^{2m-1} sigma_kernel(2 pi x) dx.

Second kind (attached to the bracket zeta): generating function
    t * sigma_kernel(t) = sum B_n t^n / n!,
value route B_n = (-1)^{n+1} n zeta_d(1-n), and the integral route
    B_{2m} = (-1)^{m+1} 4m Integral_0^inf x^{2m-1} / (sigma(x) e^{2pi x} - 1) dx.

Classical limits: both families tend to the classical Bernoulli numbers
as p -> infinity; the second kind tends to (2^{1-2m} - 1) B_{2m} as
p -> 0.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from mpmath import mp, mpf

import mpmath

from .ctx import NumericContext
from .errors import DomainError
from .pseries import Series, expm1_series
from .quadrature import integrate_semiaxis
from .spectrum import root_table, sigma_kernel
from .zeta import bernoulli_fraction, zeta_deformed


@dataclass
class PBernoulliSet:
    """A prefix B_0..B_N of one family at one parameter value."""

    p: mpf
    kind: int            # 1 or 2
    values: list = field(default_factory=list)
    route: str = ""


_cache_lock = threading.Lock()
_value_cache: dict = {}


def clear_bernoulli_cache():
    with _cache_lock:
        _value_cache.clear()


def _cached(key, compute):
    with _cache_lock:
        if key in _value_cache:
            return _value_cache[key]
    val = compute()
    with _cache_lock:
        _value_cache.setdefault(key, val)
    return val


# ---------------------------------------------------------------------
# second kind
# ---------------------------------------------------------------------

def b2_via_zeta(n: int, p, ctx: NumericContext):
    """B_n (second kind) from values of the spectral zeta function.

    B_n = (-1)^{n+1} n zeta_d(1-n); B_0 = 1 by the generating function.
    """
    if n < 0:
        raise DomainError("index must be nonnegative")
    if n == 0:
        return mpf(1)
    key = ("b2z", mp.nstr(mpf(p), 25), ctx.digits, n)

    def compute():
        with ctx.workprec():
            return (-1) ** (n + 1) * n * zeta_deformed(1 - n, mpf(p), ctx)

    return _cached(key, compute)


def b2_via_integral(m: int, p, ctx: NumericContext):
    """B_{2m} (second kind) by quadrature.

    The integrand x^{2m-1} / (sigma(x) e^{2pi x} - 1) is rewritten as
    x^{2m-1} (p - x) / (p expm1(2pi x) + x (e^{2pi x} + 1)), which is
    smooth through x = p (the raw fraction has a removable zero there)
    and cancellation-free near x = 0.
    """
    if m < 1:
        raise DomainError("index must be >= 1")
    p = mpf(p)

    def compute():
        with ctx.workprec():
            def f(x):
                e = mp.e ** (2 * mp.pi * x)
                den = p * mp.expm1(2 * mp.pi * x) + x * (e + 1)
                return x ** (2 * m - 1) * (p - x) / den

            splits = sorted({min(p, mpf(4)), mpf(1)})
            val = integrate_semiaxis(f, ctx, split_points=splits,
                                     tail_from=max(mpf(2), min(p, mpf(4))) + 2)
            return 4 * m * (-1) ** (m + 1) * val

    return _cached(("b2i", mp.nstr(p, 25), ctx.digits, m), compute)


def b2_gf_fit(p, n_max: int, ctx: NumericContext) -> PBernoulliSet:
    """Low-order probe of the second-kind family by least squares.

    Samples t * sigma_kernel(t) on a geometric grid in [1e-3, 0.5] and
    fits a polynomial; honest only to ~1e-6 for n <= n_max <= 8.
    """
    if n_max > 8:
        raise DomainError("fit route is limited to n_max <= 8")
    p = mpf(p)
    deg = n_max + 4
    with ctx.workprec():
        npts = 3 * (deg + 1)
        ts = [mpf("0.001") * (mpf(500) ** (mpf(i) / (npts - 1)))
              for i in range(npts)]
        ys = [t * sigma_kernel(t, p, ctx) for t in ts]
        A = mp.matrix(npts, deg + 1)
        b = mp.matrix(npts, 1)
        for i, (t, y) in enumerate(zip(ts, ys)):
            for j in range(deg + 1):
                A[i, j] = t ** j
            b[i] = y
        coeffs = mpmath.qr_solve(A, b)[0]
        vals = [coeffs[n] * mpmath.factorial(n) for n in range(n_max + 1)]
    return PBernoulliSet(p=p, kind=2, values=vals, route="gf_fit")


# ---------------------------------------------------------------------
# first kind
# ---------------------------------------------------------------------

def _denominator_series(p, order):
    """f(y) = (e^y - 1)(p + y/2pi) + y/pi as a truncated power series."""
    e1 = expm1_series(order)
    lin = Series.zero(order)
    lin.c[0] = mpf(p)
    lin.c[1] = 1 / (2 * mp.pi)
    f = e1 * lin
    f.c[1] += 1 / mp.pi
    return f


def b1_via_series(n_max: int, p, ctx: NumericContext) -> PBernoulliSet:
    """First-kind family by exact series division of the generating
    function t (p - t/2pi) / f(t)."""
    p = mpf(p)
    with ctx.workprec():
        order = n_max + 6
        num = Series.zero(order)
        num.c[1] = p
        num.c[2] = -1 / (2 * mp.pi)
        quot = num.div(_denominator_series(p, order))
        vals = [quot.c[n] * mpmath.factorial(n) for n in range(n_max + 1)]
    return PBernoulliSet(p=p, kind=1, values=vals, route="generating_series")


def b1_via_integral(m: int, p, ctx: NumericContext, sign=None):
    """First-kind B_{2m} by quadrature of the spectral heat kernel:
    sign * 4m Integral_0^inf x^{2m-1} sigma_kernel(2 pi x) dx.

    The printed sign exponent in the source integral formula is
    ambiguous; `sign` overrides the default (-1)^{m+1} so both readings
    can be compared against the series route.
    """
    if m < 1:
        raise DomainError("index must be >= 1")
    p = mpf(p)
    if sign is None:
        sign = (-1) ** (m + 1)

    def compute():
        with ctx.workprec():
            tab = root_table(p, ctx)
            tab.ensure(8)
            lam1 = tab.roots[0]

            def f(x):
                return x ** (2 * m - 1) * sigma_kernel(2 * mp.pi * x, p, ctx)

            # decay scale e^{-2 pi lam1 x}
            a = (mp.dps * mp.log(10)) / (2 * mp.pi * lam1)
            val = integrate_semiaxis(f, ctx, split_points=(mpf(1) / 4, 1),
                                     tail_from=max(mpf(2), a / 3))
            return 4 * m * val

    return sign * _cached(("b1i", mp.nstr(p, 25), ctx.digits, m), compute)


def b1_via_zeta(m: int, p, ctx: NumericContext):
    """First-kind B_{2m} from the Euler-type closed form
    zeta_d(2m) = (-1)^{m+1} (2pi)^{2m} B_{2m} / (2 (2m)!)."""
    if m < 1:
        raise DomainError("index must be >= 1")
    with ctx.workprec():
        z = zeta_deformed(2 * m, mpf(p), ctx)
        return ((-1) ** (m + 1) * 2 * mpmath.factorial(2 * m)
                * (2 * mp.pi) ** (-2 * m) * z)


def classical_bernoulli_mpf(n: int):
    fr = bernoulli_fraction(n)
    return mpf(fr.numerator) / fr.denominator
