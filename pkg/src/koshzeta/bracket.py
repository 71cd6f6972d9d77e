"""The bracket kernel (s, nu k)_k and the deformed exponential.

For nu = 2 pi p the bracket is the normalized Mellin transform

    (s, nu k)_k = (1/Gamma(s)) int_0^inf e^{-x} ((k nu - x)/(k nu + x))^k
                  x^{s-1} dx      (Re s > 0),

an entire function of s after continuation.  Three public routes are
implemented (direct quadrature, a (k+1)-term Kummer-U finite sum valid
for all s, and a Taylor-subtraction Mellin continuation); they are kept
algorithmically independent so the verification suite can play them
against each other.

Internally a fourth representation is used for speed: the integral in
log coordinates y = log x becomes a smooth two-sided-decaying integrand
whose trapezoid sums converge geometrically for *any* imaginary part of
s, so bracket values along vertical contours reduce to cached dot
products.  The k -> infinity expansion of the bracket in powers of k^-2
(with coefficients built from Pochhammer moments) supplies tail sums for
the Dirichlet series over k.
"""

from __future__ import annotations

import threading

from mpmath import mp, mpf, mpc

import mpmath

from .ctx import NumericContext
from .errors import DomainError, NonConvergenceError
from .pseries import Series
from .quadrature import integrate_panel, integrate_semiaxis, integrate_tail, \
    integrate_vertical_line
from .special import kummer_U


def nu_of(p):
    return 2 * mp.pi * p


def _as_number(x):
    return x if isinstance(x, mpc) else mpf(x)


# ---------------------------------------------------------------------
# route 1: direct quadrature (Re s > 0)
# ---------------------------------------------------------------------

def bracket_integral(s, k, p, ctx: NumericContext):
    """Bracket by adaptive quadrature; requires Re(s) > 0."""
    s = _as_number(s)
    if (s.real if isinstance(s, mpc) else s) <= 0:
        raise DomainError("bracket_integral needs Re(s) > 0")
    with ctx.workprec():
        nu = nu_of(mpf(p))
        kn = k * nu

        def f(x):
            return mp.e ** (-x) * ((kn - x) / (kn + x)) ** k * x ** (s - 1)

        splits = [kn] if kn < 3 * mp.dps else [1]
        val = integrate_semiaxis(f, ctx, split_points=splits)
        return val / mpmath.gamma(s)


# ---------------------------------------------------------------------
# route 2: Kummer finite sum (entire in s)
# ---------------------------------------------------------------------

_u_memo_lock = threading.Lock()
_u_memo: dict = {}


def _u_cached(a, k, kn, ctx):
    """Memoized U(a; a+1-k; kn); the deformed-exponential series hits
    the same argument lattice a = z - n + j repeatedly."""
    key = (mp.nstr(mpc(a), 22), k, mp.nstr(kn, 22), 8 * ((mp.dps + 7) // 8))
    with _u_memo_lock:
        if key in _u_memo:
            return _u_memo[key]
    val = kummer_U(a, a + 1 - k, kn, ctx)
    with _u_memo_lock:
        _u_memo.setdefault(key, val)
    return val


def bracket_kummer(s, k, p, ctx: NumericContext):
    """Bracket via the (k+1)-term U-function sum; valid for all s."""
    s = _as_number(s)
    with ctx.workprec():
        nu = nu_of(mpf(p))
        kn = k * nu
        total = mpc(0)
        poch = mpc(1)          # (s)_j rising factorial
        binom = mpf(1)          # C(k, j)
        sign = 1
        for j in range(k + 1):
            u = _u_cached(s + j, k, kn, ctx)
            total += sign * binom * poch * u
            poch = poch * (s + j)
            binom = binom * (k - j) / (j + 1)
            sign = -sign
        out = kn ** s * total
        return out if isinstance(s, mpc) and s.imag != 0 else out.real


# ---------------------------------------------------------------------
# route 3: Taylor-subtraction continuation
# ---------------------------------------------------------------------

def _g_series(k, p, order):
    """Taylor coefficients of g(x) = e^{-x}((k nu - x)/(k nu + x))^k at 0.

    log of the ratio factor is -2k * sum_i (x/(k nu))^{2i+1} / (2i+1).
    """
    nu = nu_of(mpf(p))
    kn = k * nu
    expo = Series.zero(order)
    if order > 1:
        expo.c[1] = mpf(-1)
    i = 0
    while 2 * i + 1 < order:
        expo.c[2 * i + 1] += -2 * k / ((2 * i + 1) * kn ** (2 * i + 1))
        i += 1
    return expo.exp()


def bracket_mellin_sub(s, k, p, ctx: NumericContext, subtract_order=None):
    """Bracket by Mellin continuation with Taylor subtraction at 0.

    Valid for Re(s) > -(M+1) where M = subtract_order; at the nonpositive
    integers -m (m <= M) the formula collapses to the derivative value
    (-1)^m g^{(m)}(0), which is what is returned there.
    """
    s = _as_number(s)
    re_s = s.real if isinstance(s, mpc) else s
    M = subtract_order if subtract_order is not None else max(4, int(-re_s) + 3)
    if re_s <= -(M + 1):
        raise DomainError(f"subtract_order {M} too small for Re(s)={re_s}")
    with ctx.workprec():
        nu = nu_of(mpf(p))
        kn = k * nu
        gser = _g_series(k, p, M + 1 + 8 * (ctx.digits // 4))
        # exact nonpositive integer: continuation value is a derivative
        s_is_int = (not isinstance(s, mpc) or s.imag == 0) and \
            mpmath.isint(s.real if isinstance(s, mpc) else s)
        if s_is_int and re_s <= 0:
            m = int(-(s.real if isinstance(s, mpc) else s))
            if m <= M:
                return (-1) ** m * gser.c[m] * mpmath.factorial(m)
        # radius of reliable Taylor evaluation of the remainder
        r0 = min(mpf("0.35"), kn / mpf(3))
        boost = int((M + 1) * mp.log10(1 / r0)) + 8

        def g_direct(x):
            return mp.e ** (-x) * ((kn - x) / (kn + x)) ** k

        def remainder(x):
            # g(x) - sum_{m<=M} c_m x^m, stable on both sides of r0
            if x < r0:
                acc = mpf(0)
                for c in reversed(gser.c[M + 1:]):
                    acc = acc * x + c
                return acc * x ** (M + 1)
            with mp.workdps(mp.dps + boost):
                acc = mpf(0)
                for c in reversed(gser.c[: M + 1]):
                    acc = acc * x + c
                return g_direct(x) - acc

        i1 = integrate_panel(lambda x: remainder(x) * x ** (s - 1),
                             mpf(0), mpf(1), ctx.quad_tol / 4)
        i2 = sum(gser.c[m] / (s + m) for m in range(M + 1))
        if kn > 1 and kn < 3 * mp.dps:
            i3 = integrate_panel(lambda x: g_direct(x) * x ** (s - 1),
                                 mpf(1), kn, ctx.quad_tol / 4)
            i3 += integrate_tail(lambda x: g_direct(x) * x ** (s - 1),
                                 kn, ctx.quad_tol / 4)
        else:
            i3 = integrate_tail(lambda x: g_direct(x) * x ** (s - 1),
                                mpf(1), ctx.quad_tol / 4)
        out = (i1 + i2 + i3) * mpmath.rgamma(s)
        return out if isinstance(s, mpc) and s.imag != 0 else \
            (out.real if isinstance(out, mpc) else out)


# ---------------------------------------------------------------------
# fast lattice representation (log-coordinate trapezoid)
# ---------------------------------------------------------------------

class BracketLattice:
    """Fixed log-space grid carrying cached kernel rows per k.

    In y = log x the bracket integrand is e^{s y} g_k(e^y); on a uniform
    y-lattice the trapezoid sum converges geometrically with a rate set
    by the strip |Im y| < pi (nearest singularity of g_k), uniformly in
    Im(s) once the accuracy demanded at height t is relaxed like
    e^{1.2 |t|} -- exactly the envelope a gamma factor provides.
    """

    def __init__(self, p, dps):
        self.p = mpf(p)
        self.dps = dps
        self.row_dps = dps + 12   # headroom: row noise is amplified by 1/Gamma
        with mp.workdps(dps):
            self.nu = nu_of(self.p)
            tol_digits = mpf(dps + 2) * mp.log(10)
            # two constraints on the node spacing: the analyticity strip
            # of g_k in Im(log x), and aliasing images at 2 pi/h which are
            # re-amplified by 1/Gamma on the highest contours we serve
            t_cap = mpf("0.64") * tol_digits * mpf("1.25") + 12
            self.t_cap = t_cap
            rate = max(tol_digits / mpf("1.3") + 14,
                       2 * t_cap + (2 / mp.pi) * (tol_digits - mpf("1.2") * t_cap))
            self.h = 2 * mp.pi / rate
            # right edge: e^{-x_max} must stay below tolerance even after
            # the 1/Gamma amplification on the highest contour served
            y_max = mp.log(2 * tol_digits + 2 * t_cap + 40)
            self.i_max = int(y_max / self.h) + 1
            self.i_min = 0          # grows downward on demand
            self.xs = {}             # index -> x = e^{i h}
            self.rows = {}           # k -> {index: g_k(x_i)}
        self._ensure_range(-int(tol_digits / (2 * self.h)) - 2)

    def _ensure_range(self, i_lo):
        with mp.workdps(self.row_dps):
            for i in range(self.i_max, i_lo - 1, -1):
                if i not in self.xs:
                    self.xs[i] = mp.e ** (i * self.h)
            self.i_min = min(self.i_min, i_lo)

    def _row(self, k, i_lo):
        row = self.rows.get(k)
        if row is None:
            row = {}
            self.rows[k] = row
        with mp.workdps(self.row_dps):
            kn = k * self.nu
            for i in range(self.i_max, i_lo - 1, -1):
                if i not in row:
                    x = self.xs[i]
                    row[i] = mp.e ** (-x) * ((kn - x) / (kn + x)) ** k
        return row

    def brackets(self, s, ks, tol):
        """Bracket values for each k in ks at a common s (Re s > 0.3).

        tol is the absolute accuracy demanded.  The raw trapezoid sum
        equals Gamma(s) * bracket, so both the truncation depth and the
        working precision are tied to |Gamma(s)|: at large |Im s| the
        final division amplifies everything by e^{pi |t| / 2}.
        """
        s = _as_number(s)
        with mp.workdps(self.dps):
            re_s = s.real if isinstance(s, mpc) else mpf(s)
            if re_s < mpf("0.3"):
                raise DomainError("lattice route needs Re(s) >= 0.3")
            absgam = abs(mpmath.gamma(s))
            boost = max(0, int(-mp.log10(min(absgam, mpf(1)))) + 4)
            t_abs = abs(s.imag) if isinstance(s, mpc) else mpf(0)
            alias = mp.e ** (-(mp.pi / 2) * max(2 * mp.pi / self.h - 2 * t_abs,
                                                mpf(0)))
            if alias > tol:
                raise NonConvergenceError(
                    f"lattice aliasing floor {mp.nstr(alias, 4)} exceeds "
                    f"requested tolerance at Im(s)={mp.nstr(t_abs, 6)}")
        with mp.workdps(self.dps + boost):
            sum_tol = max(tol * absgam, mpf(10) ** (-(self.row_dps + 15)))
            i_lo = int(mp.log(sum_tol) / (re_s * self.h)) - 2
            self._ensure_range(i_lo)
            idx = range(i_lo, self.i_max + 1)
            eh = mp.e ** (s * self.h)
            # e^{s y_i} by running product (one multiply per node)
            E = {}
            acc = mp.e ** (s * (i_lo * self.h))
            for i in idx:
                E[i] = acc
                acc = acc * eh
            rg = mpmath.rgamma(s)
            out = {}
            for k in ks:
                row = self._row(k, i_lo)
                tot = mpc(0)
                for i in idx:
                    tot += E[i] * row[i]
                out[k] = tot * self.h * rg
            return out


_lattice_lock = threading.Lock()
_lattices: dict = {}


def bracket_lattice(p, ctx: NumericContext) -> BracketLattice:
    dps = 8 * ((ctx.working_dps + 7) // 8)
    key = (mp.nstr(mpf(p), 25), dps)
    with _lattice_lock:
        lat = _lattices.get(key)
        if lat is None:
            lat = BracketLattice(p, dps)
            _lattices[key] = lat
        return lat


def clear_bracket_cache():
    with _lattice_lock:
        _lattices.clear()
    with _u_memo_lock:
        _u_memo.clear()


# ---------------------------------------------------------------------
# asymptotics in k (tail model for the Dirichlet series over k)
# ---------------------------------------------------------------------

def asym_polys(p, J, dps):
    """Polynomials P_j(x) with g_k ~ e^{-Cx} sum_j P_j(x) k^{-2j}.

    Obtained from exp(-sum_i g_i x^{2i+1} eps^i), eps = k^-2,
    g_i = 2/((2i+1) nu^{2i+1}); P_j is returned as {degree: coeff}.
    """
    with mp.workdps(dps):
        nu = nu_of(mpf(p))
        gs = [2 / ((2 * i + 1) * nu ** (2 * i + 1)) for i in range(1, J + 1)]
        polys = [{0: mpf(1)}]
        for j in range(1, J + 1):
            acc: dict = {}
            for i in range(1, j + 1):
                prev = polys[j - i]
                for d, c in prev.items():
                    acc[d + 2 * i + 1] = acc.get(d + 2 * i + 1, mpf(0)) \
                        - i * gs[i - 1] * c
            polys.append({d: c / j for d, c in acc.items()})
        return polys


def asym_eval(s, polys, C):
    """T_j(s) = sum_m d_{j,m} (s)_m C^{-(s+m)} for each j; returns list."""
    max_m = max((max(pj) for pj in polys if pj), default=0)
    poch = [mpc(1)]
    for m in range(max_m):
        poch.append(poch[-1] * (s + m))
    Cs = C ** (-s)
    Cp = [mpf(1)]
    for m in range(max_m):
        Cp.append(Cp[-1] / C)
    out = []
    for pj in polys:
        tot = mpc(0)
        for d, c in pj.items():
            tot += c * poch[d] * Cp[d]
        out.append(tot * Cs)
    return out


# ---------------------------------------------------------------------
# deformed exponential
# ---------------------------------------------------------------------

def exp_p_series(x, z, k, p, ctx: NumericContext, max_terms=None):
    """exp_p(-x; z, k) = sum_n (-1)^n/n! (z - n, nu k)_k x^n, |x| < nu k."""
    x = _as_number(x)
    with ctx.workprec():
        nu = nu_of(mpf(p))
        if abs(x) >= k * nu:
            raise DomainError("series route needs |x| < nu k")
        ratio = abs(x) / (k * nu)
        max_terms = max_terms or 6 * ctx.series_terms
        total = mpc(0)
        xp = mpc(1)
        fact = mpf(1)
        scale = mpf(1)
        for n in range(max_terms):
            br = bracket_kummer(z - n, k, p, ctx)
            term = xp / fact * br
            if n % 2:
                term = -term
            total += term
            scale = max(scale, abs(term))
            # geometric envelope on the remaining tail
            if n > 4 and abs(term) / (1 - ratio) < ctx.tail_tol * max(abs(total), mpf(1)):
                return total if isinstance(x, mpc) and x.imag != 0 else total.real
            xp = xp * x
            fact = fact * (n + 1)
        raise NonConvergenceError("exp_p series did not meet tolerance",
                                  best=total)


def exp_p_mellin(x, z, k, p, ctx: NumericContext):
    """exp_p(-x; z, k) by inverse Mellin transform, x off (-inf, 0].

    The vertical-line route needs an angular margin between arg(x) and
    +/- pi/2 for its tail to decay; near the imaginary axis the series
    continuation is used instead (the two agree on the overlap).
    """
    x = _as_number(x)
    with ctx.workprec():
        if x == 0 or (isinstance(x, mpf) and x < 0) or \
                (isinstance(x, mpc) and x.imag == 0 and x.real <= 0):
            raise DomainError("exp_p_mellin needs x off the cut (-inf, 0]")
        margin = mp.pi / 2 - abs(mp.arg(x))
        nu = nu_of(mpf(p))
        if margin < mpf("0.25"):
            if abs(x) < k * nu:
                return exp_p_series(x, z, k, p, ctx)
            raise NonConvergenceError(
                "x too close to the imaginary axis for the contour route "
                "and outside the series disc")
        zre = z.real if isinstance(z, mpc) else mpf(z)
        c = max(mpf(1), mpf("1.5") - zre)
        lat = bracket_lattice(p, ctx)
        tol = ctx.quad_tol

        def f(s):
            br = lat.brackets(s + z, [k], tol * mpf("0.01"))[k]
            return mpmath.gamma(s) * br * x ** (-s)

        val = integrate_vertical_line(f, c, ctx)
        return val if isinstance(x, mpc) and x.imag != 0 else val.real
