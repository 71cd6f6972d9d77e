"""Quadrature engines used throughout the package.

Three building blocks:

* tanh-sinh (double-exponential) rules on finite panels, robust against
  integrable endpoint singularities;
* an exp-sinh rule for semi-infinite tails of exponentially decaying
  integrands;
* a trapezoid rule on vertical lines in the complex plane for inverse
  Mellin transforms, with step halving and adaptive height extension.

Node tables are cached per (precision bucket, level) and shared; all
refinement loops are deterministic functions of the integrand and the
context, which is what makes verification reports reproducible.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf, mpc

from .ctx import NumericContext
from .errors import NonConvergenceError

_MAX_LEVEL = 12

# (dps_bucket, kind, level) -> list of (offset, weight) for u > 0
_node_cache: dict = {}


def _dps_bucket() -> int:
    # quantize so nearby precisions share node tables
    return 8 * ((mp.dps + 7) // 8)


def _ts_nodes(level: int):
    """tanh-sinh nodes for the normalized panel [0, 1], u >= 0 half.

    Returns (center_weight, pairs) where pairs holds (d, w): d is the
    distance from the *nearer* endpoint (so callers can form both the
    left and the mirrored right node without cancellation), w the weight
    including the step size h = 2^-level.
    """
    key = (_dps_bucket(), "ts", level)
    if key in _node_cache:
        return _node_cache[key]
    with mp.workdps(_dps_bucket() + 10):
        h = mpf(2) ** (-level)
        eps = mpf(10) ** (-(_dps_bucket() + 5))
        piover2 = mp.pi / 2
        center_w = h * piover2 / 2  # u=0: d=1/2, weight h*(pi/2)/2
        pairs = []
        j = 1
        while True:
            u = j * h
            t = piover2 * mp.sinh(u)
            et = mp.exp(t)
            inv = 1 / (et + 1 / et)
            d = (1 / et) * inv          # (1 - tanh t)/2
            w = h * piover2 * mp.cosh(u) * 2 * inv * 2 * inv / 2
            if w < eps and d < eps:
                break
            pairs.append((d, w))
            j += 1
            if j > 40 * 2**level:
                break
    _node_cache[key] = (center_w, pairs)
    return _node_cache[key]


def _es_nodes(level: int):
    """exp-sinh nodes for [0, inf), suited to exponential decay.

    Substitution x = exp((pi/2) sinh u).  Returns list of (x, w) over the
    full line, truncated where the weight alone is negligible on the
    growing side and x is negligible on the shrinking side.
    """
    key = (_dps_bucket(), "es", level)
    if key in _node_cache:
        return _node_cache[key]
    with mp.workdps(_dps_bucket() + 10):
        h = mpf(2) ** (-level)
        eps = mpf(10) ** (-(_dps_bucket() + 5))
        piover2 = mp.pi / 2
        nodes = [(mpf(1), h * piover2)]  # u = 0
        # positive u: x grows double-exponentially; stop once e^{-x}
        # cannot matter for any integrand we feed in (decay assumption).
        j = 1
        while True:
            u = j * h
            t = piover2 * mp.sinh(u)
            x = mp.exp(t)
            w = h * piover2 * mp.cosh(u) * x
            if x > 3 * (_dps_bucket() + 10):
                break
            nodes.append((x, w))
            j += 1
        j = -1
        while True:
            u = j * h
            t = piover2 * mp.sinh(u)
            x = mp.exp(t)
            w = h * piover2 * mp.cosh(u) * x
            if w < eps * x or x < eps:
                break
            nodes.append((x, w))
            j -= 1
    _node_cache[key] = nodes
    return _node_cache[key]


def integrate_panel(f, a, b, tol, max_level=_MAX_LEVEL, min_level=4):
    """tanh-sinh integral of f over the finite panel [a, b]."""
    a = mpf(a) if not isinstance(a, mpc) else a
    b = mpf(b) if not isinstance(b, mpc) else b
    length = b - a
    prev = None
    for level in range(min_level, max_level + 1):
        center_w, pairs = _ts_nodes(level)
        total = f(a + length / 2) * center_w
        for d, w in pairs:
            dd = d * length
            total += (f(a + dd) + f(b - dd)) * w
        est = total * length
        if prev is not None and abs(est - prev) <= tol * (1 + abs(est)) / 2:
            return est
        prev = est
    raise NonConvergenceError(
        f"tanh-sinh panel [{a}, {b}] did not converge to {tol}",
        best=prev,
    )


def integrate_tail(f, a, tol, max_level=_MAX_LEVEL, min_level=4):
    """exp-sinh integral of f over [a, inf); f must decay exponentially."""
    a = mpf(a)
    prev = None
    for level in range(min_level, max_level + 1):
        total = mpf(0)
        for x, w in _es_nodes(level):
            total += f(a + x) * w
        if prev is not None and abs(total - prev) <= tol * (1 + abs(total)) / 2:
            return total
        prev = total
    raise NonConvergenceError(
        f"exp-sinh tail [{a}, inf) did not converge to {tol}", best=prev
    )


def integrate_semiaxis(f, ctx: NumericContext, split_points=(), tol=None,
                       tail_from=None):
    """Integral of f over (0, inf).

    split_points partition the axis into tanh-sinh panels; the remaining
    tail uses the exp-sinh rule (so the integrand must decay at least
    exponentially past the last split).  Endpoint singularities at 0 and
    interior structure at the split points are handled by the panel rule.
    """
    with ctx.workprec():
        tol = ctx.quad_tol if tol is None else mpf(tol)
        pts = sorted(mpf(s) for s in split_points if mpf(s) > 0)
        if not pts:
            pts = [mpf(1)]
        if tail_from is not None:
            tail_from = mpf(tail_from)
            if not pts or pts[-1] < tail_from:
                pts.append(tail_from)
        edges = [mpf(0)] + pts
        ptol = tol / (len(edges) + 1)
        total = mpf(0)
        for a, b in zip(edges[:-1], edges[1:]):
            total += integrate_panel(f, a, b, ptol)
        total += integrate_tail(f, edges[-1], ptol)
        return total


def _initial_height(c, tol):
    """Height T where the gamma-factor envelope falls below tol."""
    with mp.workdps(20):
        T = mpf(10)
        for _ in range(40):
            Tn = (2 / mp.pi) * (mp.log(mp.sqrt(2 * mp.pi) / tol)
                                + max(c - mpf("0.5"), 0) * mp.log(T))
            if abs(Tn - T) < mpf("0.01"):
                break
            T = Tn
        return float(max(T, 8))


def integrate_vertical_line(f, c, ctx: NumericContext, tol=None,
                            tail_tol=None, h0=Fraction(1, 2),
                            max_halvings=6, value_cache=None):
    """(1/(2 pi i)) * integral of f(s) ds along Re(s) = c.

    Trapezoid in t = Im(s) with step halving until successive estimates
    agree to tol.  The height is chosen from the Stirling envelope of a
    gamma factor and then extended until the boundary samples certify the
    truncated tail below tail_tol; integrands lacking eventual decay
    raise NonConvergenceError.

    value_cache, when supplied, maps Fraction(t) -> f(c + i t) and lets
    several transforms sharing the same line reuse samples.
    """
    with ctx.workprec():
        tol = ctx.quad_tol if tol is None else mpf(tol)
        tail_tol = ctx.tail_tol if tail_tol is None else mpf(tail_tol)
        cache = {} if value_cache is None else value_cache
        cmp_c = mpf(c)

        def sample(tfrac: Fraction):
            v = cache.get(tfrac)
            if v is None:
                v = f(mpc(cmp_c, mpf(tfrac.numerator) / tfrac.denominator))
                cache[tfrac] = v
            return v

        T = Fraction(int(_initial_height(float(c), float(tail_tol)) / float(h0)) + 1) * h0

        est = None
        for _extension in range(24):
            # trapezoid with halving at the current height
            h = h0
            prev_est = None
            est = None
            converged = False
            for _lvl in range(max_halvings + 1):
                n_max = int(T / h)
                acc = sample(Fraction(0))
                for k in range(1, n_max + 1):
                    acc += sample(k * h) + sample(-k * h)
                est = acc * mpf(h.numerator) / h.denominator / (2 * mp.pi)
                if prev_est is not None and abs(est - prev_est) <= tol:
                    converged = True
                    break
                prev_est = est
                h = h / 2
            # boundary decay certificate
            top = abs(sample(T)) + abs(sample(-T))
            inner = abs(sample(T - 1)) + abs(sample(-(T - 1)))
            if top == 0:
                rate = mpf(10)
            elif inner > top:
                rate = mp.log(inner / top)
            else:
                rate = mpf("0.01")
            tail_est = top / max(rate, mpf("0.01"))
            if tail_est <= tail_tol * 2 * mp.pi and converged:
                return est
            if tail_est > tail_tol * 2 * mp.pi:
                T = T + max(h0 * int(float(T) * 0.3 / float(h0) + 1), h0)
            if not converged:
                max_halvings += 1
                if max_halvings > 10:
                    raise NonConvergenceError(
                        f"vertical line at c={c}: trapezoid stalled", best=est
                    )
        raise NonConvergenceError(
            f"vertical line at c={c}: no decaying tail found", best=est
        )
