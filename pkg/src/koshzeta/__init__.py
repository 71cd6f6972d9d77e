"""koshzeta: configurable-precision Koshliakov-type zeta machinery.

The package evaluates a one-parameter deformation of the Riemann zeta
function built from the root spectrum of p*sin(pi*x) + x*cos(pi*x), the
companion Dirichlet-type series over an incomplete-gamma-style bracket
kernel, the two families of deformed Bernoulli numbers they generate,
deformed Lambert-series sums, Ramanujan-type polynomial identities and
deformed Eisenstein series -- together with a verification harness that
recomputes every identity as a numerical residual.
"""

from .ctx import NumericContext, make_context
from .errors import DomainError, KoshzetaError, NonConvergenceError

__all__ = [
    "NumericContext",
    "make_context",
    "DomainError",
    "KoshzetaError",
    "NonConvergenceError",
    "zeta_deformed",
    "eta_deformed",
    "weighted_sum",
    "run_verification",
]


def zeta_deformed(s, p, ctx=None, **kw):
    from .zeta import zeta_deformed as fn
    return fn(s, p, ctx or make_context(), **kw)


def eta_deformed(s, p, ctx=None, **kw):
    from .zeta import eta_deformed as fn
    return fn(s, p, ctx or make_context(), **kw)


def weighted_sum(alpha, m, p, ctx=None, **kw):
    from .omega import weighted_sum as fn
    return fn(alpha, m, p, ctx or make_context(), **kw)


def run_verification(profile="standard", **kw):
    from .verify import run_all
    return run_all(profile, **kw)

__version__ = "0.1.0"
