"""Root spectrum of p*sin(pi*x) + x*cos(pi*x) and derived kernels.

The j-th positive root lambda_j lies in (j - 1/2, j), approaches j as the
deformation parameter p grows and j - 1/2 as p vanishes.  Sums over the
spectrum carry the weights

    w_j = (p^2 + lambda_j^2) / (p(p + 1/pi) + lambda_j^2).

A fact this module exploits heavily: writing the root condition as
x(lam) = lam + 1/2 - arctan(p/lam)/pi (so that x(lambda_j) = j), one has
w(lam) * x'(lam) = 1 identically.  Spectral sums therefore admit
Euler-Maclaurin tails whose integral term is an elementary closed form,
which is what makes high-precision evaluation of the deformed zeta
function and the exponential kernel cheap at any argument.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from mpmath import mp, mpf, mpc

import mpmath

from .ctx import NumericContext
from .errors import DomainError, NonConvergenceError
from .pseries import Series

_table_lock = threading.Lock()
_tables: dict = {}


def sigma_ratio(x, p):
    """The reflection kernel (p + x)/(p - x)."""
    return (p + x) / (p - x)


def d_correction(x, w, p):
    """Defect D_p(x, w) in the kernel multiplication rule.

    sigma_ratio(x - w) = sigma_ratio(x) * sigma_ratio(-w) + D_p(x, w).
    """
    return 2 * x * w * (w - x) / ((p - x + w) * (p - x) * (p + w))


def _root_equation(lam, p):
    return p * mp.sin(mp.pi * lam) + lam * mp.cos(mp.pi * lam)


def _root_equation_deriv(lam, p):
    return ((p * mp.pi + 1) * mp.cos(mp.pi * lam)
            - lam * mp.pi * mp.sin(mp.pi * lam))


def _solve_root(j, p):
    """One root by the contraction lam = j - 1/2 + arctan(p/lam)/pi.

    The iteration map has derivative magnitude at most 1/(2 pi lam), so
    it contracts at rate <= 1/pi uniformly over j >= 1 and p > 0, and
    much faster for large j or extreme p.  Two Newton steps polish the
    last bits.
    """
    half = mpf(1) / 2
    lam = j - mp.atan(mpf(j) / p) / mp.pi
    # the contraction only needs to land within Newton's basin; the
    # quadratic polish below supplies the remaining digits, so a loose
    # half-precision stop avoids ulp-level limit cycles
    tol = mpf(10) ** (-(mp.dps // 2 + 5))
    prev = None
    for _ in range(8 * mp.dps + 40):
        nxt = j - half + mp.atan(p / lam) / mp.pi
        if prev is not None and abs(nxt - lam) <= tol * lam:
            lam = nxt
            break
        prev, lam = lam, nxt
    else:
        raise NonConvergenceError(f"root {j} at p={p} did not converge")
    for _ in range(3):
        df = _root_equation_deriv(lam, p)
        if df != 0:
            lam = lam - _root_equation(lam, p) / df
    return lam


@dataclass
class RootTable:
    """Cached prefix of the root spectrum for one (p, precision) pair."""

    p: mpf
    dps: int
    roots: list = field(default_factory=list)
    weights: list = field(default_factory=list)
    logs: list = field(default_factory=list)

    def ensure(self, count):
        if count <= len(self.roots):
            return self
        with mp.workdps(self.dps):
            D = self.p * (self.p + 1 / mp.pi)
            for j in range(len(self.roots) + 1, count + 1):
                lam = _solve_root(j, self.p)
                self.roots.append(lam)
                self.weights.append((self.p**2 + lam**2) / (D + lam**2))
                self.logs.append(mp.log(lam))
        return self

    def root(self, j):
        self.ensure(j)
        return self.roots[j - 1]

    def weight(self, j):
        self.ensure(j)
        return self.weights[j - 1]


def root_table(p, ctx: NumericContext, count=0) -> RootTable:
    """Shared root table at the context's working precision."""
    if mpf(p) <= 0:
        raise DomainError("deformation parameter p must be positive")
    dps = ctx.working_dps + 10
    key = (mp.nstr(mpf(p), 25), 8 * ((dps + 7) // 8))
    with _table_lock:
        tab = _tables.get(key)
        if tab is None:
            with mp.workdps(dps):
                tab = RootTable(p=mpf(p), dps=8 * ((dps + 7) // 8))
            _tables[key] = tab
    if count:
        tab.ensure(count)
    return tab


def lambda_roots(p, count, ctx: NumericContext):
    """First `count` roots as a list."""
    tab = root_table(p, ctx, count)
    return tab.roots[:count]


def clear_spectrum_cache():
    with _table_lock:
        _tables.clear()


# -- Euler-Maclaurin tails over the spectrum ----------------------------


def _shifted_f_series(tab: RootTable, J, kind, param, order):
    """Series in u of f(J + u), f(x) = w(lam(x)) * phi(lam(x)).

    kind 'pow': phi(lam) = lam^(-s), param = s.
    kind 'exp': phi(lam) = e^(-lam t), param = t (normalized by e^{-lam_J t}).
    Returns (series, prefactor) with f(J+u) = prefactor * series(u).
    """
    p = tab.p
    lamJ = tab.root(J)
    D = p * (p + 1 / mp.pi)
    # x(lamJ + v) - J  =  v + (arctan(p/lamJ) - arctan(p/(lamJ+v)))/pi
    # built from the rational derivative p/((lamJ+v)^2 + p^2)
    den = Series([lamJ**2 + p**2, 2 * lamJ, mpf(1)] + [mpf(0)] * (order - 3)) \
        if order >= 3 else Series([lamJ**2 + p**2, 2 * lamJ])
    r = Series([p] + [mpf(0)] * (order - 1)).div(den.truncate(order))
    phi_v = Series.x(order)
    for i in range(order - 1):
        phi_v.c[i + 1] += r.c[i] / ((i + 1) * mp.pi)
    v_of_u = phi_v.reversion()
    # w(lamJ + v) as a rational series in v
    num_w = Series([p**2 + lamJ**2, 2 * lamJ, mpf(1)] + [mpf(0)] * max(order - 3, 0)).truncate(order)
    den_w = Series([D + lamJ**2, 2 * lamJ, mpf(1)] + [mpf(0)] * max(order - 3, 0)).truncate(order)
    w_v = num_w.div(den_w)
    if kind == "pow":
        s = param
        log1p = Series([mpf(0)] + [mpf(-1) ** (i + 1) / (i * lamJ**i)
                                   for i in range(1, order)])
        phi = (log1p * (-s)).exp()
        pref = lamJ ** (-s)
    elif kind == "exp":
        t = param
        phi = Series([mpf(0), -t] + [mpf(0)] * (order - 2)).exp()
        pref = mp.e ** (-lamJ * t)
    else:  # pragma: no cover
        raise DomainError(f"unknown kind {kind}")
    total_v = w_v * phi
    return total_v.compose(v_of_u), pref


def spectral_tail(tab: RootTable, J, kind, param, ctx: NumericContext,
                  bernoulli_even):
    """sum_{j >= J} w_j * phi(lambda_j) by Euler-Maclaurin.

    bernoulli_even: callable m -> B_{2m} as mpf (classical numbers).
    The integral term is exact because w * x' = 1:
      kind 'pow': lamJ^(1-s)/(s-1); kind 'exp': e^(-lamJ t)/t.
    Derivative corrections come from the u-series of f(J + u); the
    expansion is asymptotic, so terms are added while they shrink and J
    is doubled if the tolerance is not reached before they grow.
    """
    tol = ctx.tail_tol * mpf(10) ** (-3)
    attempts = 0
    while True:
        lamJ = tab.root(J)
        if kind == "pow":
            s = param
            integral = lamJ ** (1 - s) / (s - 1)
        else:
            t = param
            integral = mp.e ** (-lamJ * t) / t
        order = 26
        fser, pref = _shifted_f_series(tab, J, kind, param, order)
        total = integral + pref * fser.c[0] / 2
        last = abs(pref) * max(abs(fser.c[0]), mpf(1))
        ok = False
        r = 1
        while 2 * r + 1 < order:
            deriv = fser.c[2 * r - 1] * mpmath.factorial(2 * r - 1)
            term = -bernoulli_even(r) / mpmath.factorial(2 * r) * pref * deriv
            mag = abs(term)
            if mag > last and last < tol:
                ok = True
                break
            total += term
            if mag < tol:
                ok = True
                break
            if mag > last * 4:
                break  # divergence onset before tolerance: J too small
            last = mag
            r += 1
        if ok:
            return total
        attempts += 1
        if attempts > 6:
            raise NonConvergenceError(
                f"spectral tail stalled at J={J} for {kind}", best=total)
        J *= 2


def sigma_kernel(t, p, ctx: NumericContext):
    """sigma_p(t) = sum_j w_j exp(-lambda_j t) for Re(t) > 0."""
    t = mpc(t) if isinstance(t, (mpc, complex)) else mpf(t)
    re_t = t.real if isinstance(t, mpc) else t
    if re_t <= 0:
        raise DomainError("sigma kernel needs Re(t) > 0")
    with ctx.workprec():
        tab = root_table(p, ctx)
        from .zeta import bernoulli_even_mpf  # classical numbers
        # direct geometric-bounded summation when few roots suffice
        need = mp.log(1 / ctx.tail_tol) - mp.log(-mp.expm1(-re_t)) + 5
        J_direct = int(need / re_t) + 2
        if J_direct <= 1200:
            tab.ensure(J_direct)
            acc = mpf(0)
            for lam, w in zip(tab.roots[:J_direct], tab.weights[:J_direct]):
                acc += w * mp.e ** (-lam * t)
            return acc
        J = 64
        tab.ensure(J)
        acc = mpf(0)
        for lam, w in zip(tab.roots[: J - 1], tab.weights[: J - 1]):
            acc += w * mp.e ** (-lam * t)
        return acc + spectral_tail(tab, J, "exp", t, ctx,
                                   lambda m: bernoulli_even_mpf(m))
