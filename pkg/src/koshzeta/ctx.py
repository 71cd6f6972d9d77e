"""Numeric context: precision targets and derived tolerances.

Every public function in the package takes a NumericContext and performs
its mpmath work at an elevated working precision (digits + guard).  The
two tolerances are derived from the digit request rather than set
independently, so a single knob moves the whole pipeline.
"""

from __future__ import annotations

import contextlib
from dataclasses import dataclass, field

from mpmath import mp, mpf

from .errors import DomainError

# Extra decimal digits used internally on top of the requested accuracy.
GUARD_DIGITS = 10


@dataclass(frozen=True)
class NumericContext:
    """Precision bundle threaded through all numerical routines.

    digits       -- decimal digits the caller wants to trust in results
    quad_tol     -- absolute tolerance for quadrature refinement loops
    tail_tol     -- absolute tolerance for series/sum tail truncation
    series_terms -- default order cap for truncated power-series work
    """

    digits: int
    quad_tol: mpf = field(compare=False)
    tail_tol: mpf = field(compare=False)
    series_terms: int = 64

    @property
    def working_dps(self) -> int:
        return self.digits + GUARD_DIGITS

    def workprec(self, extra: int = 0):
        """Context manager setting mpmath dps for a computation block."""
        return mp.workdps(self.working_dps + extra)

    def spawn(self, digits: int) -> "NumericContext":
        """Same-shaped context at a different digit target."""
        return make_context(digits)


def make_context(digits: int = 30) -> NumericContext:
    """Build a NumericContext for a digit request.

    Tolerances sit five digits above the target so that residual checks at
    the published accuracy are not dominated by quadrature noise.
    """
    if digits < 15:
        raise DomainError(f"digits must be >= 15, got {digits}")
    with mp.workdps(digits + GUARD_DIGITS):
        tol = mpf(10) ** (-(digits - 5))
    return NumericContext(
        digits=digits,
        quad_tol=tol,
        tail_tol=tol,
        series_terms=max(64, 2 * digits),
    )


@contextlib.contextmanager
def extradps(n: int):
    with mp.workdps(mp.dps + n):
        yield
