"""Deformed Eisenstein series and their transformation laws.

E_w(z) = 1 + [2 (1 + 1/(pi p)) / eta_d(1-w)] * sum_j w_j
         omega_sum(-2 lambda_j pi i z, -w/2)          (Im z > 0, w even)

which tends to the classical weight-w Eisenstein series as the
deformation parameter grows.  Verified laws: the inversion
E_w(-1/z) = z^w E_w(z) for w >= 4, and the weight-2 quasi-relation
E_2(-1/z) = z^2 E_2(z) - z/(2 pi i) * (1 + 1/(pi p)) / eta_d(-1).
"""

from __future__ import annotations

from mpmath import mp, mpf, mpc

import mpmath

from .ctx import NumericContext
from .errors import DomainError
from .omega import weighted_sum
from .zeta import eta_deformed

__all__ = ["eisenstein_deformed", "eisenstein_classical", "check_modular",
           "check_quasi"]


def _check_z(z):
    z = mpc(z)
    if z.imag <= 0:
        raise DomainError("needs Im(z) > 0")
    return z


def eisenstein_deformed(weight: int, p, z, ctx: NumericContext,
                        abs_tol=None):
    if weight < 2 or weight % 2:
        raise DomainError("weight must be an even integer >= 2")
    z = _check_z(z)
    p = mpf(p)
    with ctx.workprec():
        norm = eta_deformed(mpf(1 - weight), p, ctx)
        if abs(norm) < mpf(10) ** (-(ctx.digits // 2)):
            raise DomainError("normalizing value too close to zero")
        alpha = -mp.pi * 1j * z       # Re(alpha) = pi Im(z) > 0
        S = weighted_sum(alpha, -weight // 2, p, ctx, abs_tol=abs_tol)
        return 1 + 2 * (1 + 1 / (mp.pi * p)) / norm * S


def eisenstein_classical(weight: int, z, ctx: NumericContext):
    """Classical q-series oracle 1 + (2/zeta(1-w)) sum n^{w-1} q^n/(1-q^n)."""
    if weight < 2 or weight % 2:
        raise DomainError("weight must be an even integer >= 2")
    z = _check_z(z)
    with ctx.workprec():
        zeta_neg = mpmath.zeta(mpf(1 - weight))
        acc = mpc(0)
        n = 0
        decay = mp.e ** (-2 * mp.pi * z.imag)
        while True:
            n += 1
            term = mpf(n) ** (weight - 1) / (mp.e ** (-2j * mp.pi * n * z) - 1)
            acc += term
            env = mpf(n) ** (weight - 1) * decay ** n / (1 - decay)
            if n >= 4 and env * 2 < ctx.tail_tol:
                break
        return 1 + 2 / zeta_neg * acc


def check_modular(weight: int, p, z, ctx: NumericContext, abs_tol=None):
    """Residual of E(-1/z) = z^weight E(z); near zero when the law holds."""
    if weight < 4:
        raise DomainError("inversion law applies to weight >= 4")
    z = _check_z(z)
    with ctx.workprec():
        left = eisenstein_deformed(weight, p, -1 / z, ctx, abs_tol=abs_tol)
        right = z ** weight * eisenstein_deformed(weight, p, z, ctx,
                                                  abs_tol=abs_tol)
        return left, right


def check_quasi(p, z, ctx: NumericContext, abs_tol=None):
    """Residual pair of the weight-2 quasi-relation."""
    z = _check_z(z)
    p = mpf(p)
    with ctx.workprec():
        left = eisenstein_deformed(2, p, -1 / z, ctx, abs_tol=abs_tol)
        norm = eta_deformed(mpf(-1), p, ctx)
        right = (z ** 2 * eisenstein_deformed(2, p, z, ctx, abs_tol=abs_tol)
                 - z / (2j * mp.pi) * (1 + 1 / (mp.pi * p)) / norm)
        return left, right
