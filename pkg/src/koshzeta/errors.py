"""Exception types shared across the package.

Two failure families matter downstream: a caller handed us a point outside
a routine's domain (DomainError, CLI exit code 2), or an adaptive scheme
ran out of refinement budget before its internal tolerance was met
(NonConvergenceError, CLI exit code 1).
"""


class KoshzetaError(Exception):
    """Base class for package-specific failures."""


class DomainError(KoshzetaError):
    """Input lies outside the mathematical domain of the operation."""


class NonConvergenceError(KoshzetaError):
    """An iterative/adaptive scheme failed to meet its tolerance.

    Carries the best estimate seen so far when available, so callers can
    decide whether a degraded answer is still useful.
    """

    def __init__(self, message, best=None, achieved=None):
        super().__init__(message)
        self.best = best
        self.achieved = achieved
