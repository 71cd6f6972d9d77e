"""Dense truncated power series over mpmath numbers.

Used for generating-function work: the deformed Bernoulli families, the
correction terms in the polynomial identities, and the Euler-Maclaurin
tail machinery all need a small, exact-order series algebra.  Series are
plain coefficient lists c[0..order-1] for c0 + c1 t + ... truncated at
t^order; arithmetic never silently extends the order.
"""

from __future__ import annotations

from mpmath import mp, mpf

from .errors import DomainError


class Series:
    """Truncated power series sum(c[i] t^i, i < order)."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        self.c = list(coeffs)
        if not self.c:
            raise DomainError("empty coefficient list")

    @property
    def order(self):
        return len(self.c)

    @property
    def valuation(self):
        for i, v in enumerate(self.c):
            if v != 0:
                return i
        return self.order  # identically-zero truncation

    @classmethod
    def zero(cls, order):
        return cls([mpf(0)] * order)

    @classmethod
    def one(cls, order):
        return cls([mpf(1)] + [mpf(0)] * (order - 1))

    @classmethod
    def x(cls, order, coeff=1):
        s = cls.zero(order)
        if order > 1:
            s.c[1] = mpf(1) * coeff
        return s

    def copy(self):
        return Series(self.c)

    def truncate(self, order):
        if order <= len(self.c):
            return Series(self.c[:order])
        return Series(self.c + [mpf(0)] * (order - len(self.c)))

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Series):
            out = self.copy()
            out.c[0] = out.c[0] + other
            return out
        n = min(self.order, other.order)
        return Series([self.c[i] + other.c[i] for i in range(n)])

    def __sub__(self, other):
        if not isinstance(other, Series):
            out = self.copy()
            out.c[0] = out.c[0] - other
            return out
        n = min(self.order, other.order)
        return Series([self.c[i] - other.c[i] for i in range(n)])

    def __neg__(self):
        return Series([-v for v in self.c])

    def __mul__(self, other):
        if not isinstance(other, Series):
            return Series([v * other for v in self.c])
        n = min(self.order, other.order)
        out = [mpf(0)] * n
        for i, a in enumerate(self.c[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = other.c[j]
                if b != 0:
                    out[i + j] += a * b
        return Series(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def mul_tpow(self, k):
        """Multiply by t^k (shifting coefficients, keeping the order)."""
        if k == 0:
            return self.copy()
        if k > 0:
            return Series(([mpf(0)] * k + self.c)[: self.order])
        if any(v != 0 for v in self.c[:-k]):
            raise DomainError("negative shift would drop nonzero terms")
        return Series(self.c[-k:] + [mpf(0)] * (-k))

    def div(self, other):
        """Series division; divisor valuation must not exceed ours."""
        vs, vo = self.valuation, other.valuation
        if vo > vs:
            raise DomainError("division valuation mismatch")
        if vo > 0:
            return self.mul_tpow(-vo).div(other.mul_tpow(-vo))
        n = min(self.order, other.order)
        inv0 = 1 / other.c[0]
        out = [mpf(0)] * n
        for i in range(n):
            acc = self.c[i]
            for j in range(1, i + 1):
                acc -= other.c[j] * out[i - j]
            out[i] = acc * inv0
        return Series(out)

    __truediv__ = div

    # -- transcendental operations --------------------------------------

    def exp(self):
        """exp of a series with zero constant term."""
        if self.c[0] != 0:
            raise DomainError("exp needs zero constant term")
        n = self.order
        out = [mpf(0)] * n
        out[0] = mpf(1)
        # out' = self' * out
        for i in range(1, n):
            acc = mpf(0)
            for j in range(1, i + 1):
                acc += j * self.c[j] * out[i - j]
            out[i] = acc / i
        return Series(out)

    def log(self):
        """log of a series with constant term 1."""
        if self.c[0] != 1:
            raise DomainError("log needs constant term 1")
        n = self.order
        out = [mpf(0)] * n
        # out' = self'/self
        deriv = Series([(i + 1) * self.c[i + 1] for i in range(n - 1)] + [mpf(0)])
        quot = deriv.div(self)
        for i in range(1, n):
            out[i] = quot.c[i - 1] / i
        return Series(out)

    def compose_scale(self, a):
        """Substitute t -> a*t."""
        out, p = [], mpf(1) * 1
        for v in self.c:
            out.append(v * p)
            p = p * a
        return Series(out)

    def compose(self, inner):
        """Substitute t -> inner(t); inner must have zero constant term."""
        if inner.c[0] != 0:
            raise DomainError("composition needs inner valuation >= 1")
        n = min(self.order, inner.order)
        out = Series.zero(n)
        for v in reversed(self.c[:n]):
            out = out * inner + v
        return out

    def reversion(self):
        """Compositional inverse of a series with c0=0, c1 != 0."""
        if self.c[0] != 0 or self.c[1] == 0:
            raise DomainError("reversion needs valuation exactly 1")
        n = self.order
        # Newton iteration in the series ring, doubling accuracy
        g = Series([mpf(0), 1 / self.c[1]] + [mpf(0)] * (n - 2))
        order = 2
        while order < n:
            order = min(2 * order, n)
            gt = g.truncate(order)
            f = self.truncate(order)
            err = f.compose(gt) - Series.x(order)
            fp = Series([(i + 1) * f.c[i + 1] for i in range(order - 1)] + [mpf(0)])
            g = gt - err.div(fp.compose(gt))
        return g.truncate(n)

    def derivative(self):
        n = self.order
        return Series([(i + 1) * self.c[i + 1] for i in range(n - 1)] or [mpf(0)])

    def __call__(self, t):
        acc = mpf(0)
        for v in reversed(self.c):
            acc = acc * t + v
        return acc

    def __repr__(self):
        shown = ", ".join(mp.nstr(v, 8) for v in self.c[:6])
        more = "..." if self.order > 6 else ""
        return f"Series([{shown}{more}], order={self.order})"


def exp_series(order):
    """Series of exp(t) to the given order."""
    out = [mpf(1)]
    fact = mpf(1)
    for i in range(1, order):
        fact *= i
        out.append(1 / fact)
    return Series(out)


def expm1_series(order):
    s = exp_series(order)
    s.c[0] = mpf(0)
    return s
