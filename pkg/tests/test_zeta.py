"""Deformed zeta pair: frozen oracles, special values, degenerations."""

import mpmath
from mpmath import mp, mpf, mpc
from fractions import Fraction

import pytest

from koshzeta.ctx import make_context
from koshzeta.zeta import (
    bernoulli_fraction, bernoulli_even_mpf, amplitude,
    zeta_deformed_series, eta_deformed_series, zeta_deformed, eta_deformed,
)
from koshzeta.errors import DomainError

# frozen from a brute-force oracle: kernel values summed directly to
# K = 3000 and K = 4000 with a leading power tail, then Richardson-
# extrapolated in K^-3; good to about 1e-16
ETA_2_P1 = "0.925315120707844179449115179459"


def test_bernoulli_fractions_exact():
    assert bernoulli_fraction(0) == Fraction(1)
    assert bernoulli_fraction(1) == Fraction(-1, 2)
    assert bernoulli_fraction(2) == Fraction(1, 6)
    assert bernoulli_fraction(12) == Fraction(-691, 2730)
    assert bernoulli_fraction(7) == Fraction(0)


def test_bernoulli_even_matches_mpmath():
    with mp.workdps(30):
        for m in (1, 3, 8):
            assert abs(bernoulli_even_mpf(m) - mpmath.bernoulli(2 * m)) \
                < mpf("1e-27")


def test_eta_frozen_oracle(ctx30):
    got = eta_deformed_series(mpf(2), mpf(1), ctx30)
    assert abs(got - mpf(ETA_2_P1)) < mpf("1e-15")


def test_eta_special_values(ctx30):
    p = mpf("0.8")
    assert eta_deformed(mpf(0), p, ctx30) == mpf(-1) / 2
    assert eta_deformed(mpf(-2), p, ctx30) == 0
    assert eta_deformed(mpf(-4), p, ctx30) == 0


def test_zeta_special_values(ctx30):
    p = mpf("0.8")
    with ctx30.workprec():
        a = amplitude(p)
        assert abs(zeta_deformed(mpf(0), p, ctx30) + a / 2) < mpf("1e-28")
    assert zeta_deformed(mpf(-2), p, ctx30) == 0
    assert zeta_deformed(mpf(-6), p, ctx30) == 0


def test_pole_and_strip_raise(ctx15):
    with pytest.raises(DomainError):
        zeta_deformed(mpf(1), mpf(1), ctx15)
    with pytest.raises(DomainError):
        eta_deformed(mpf("0.5"), mpf(1), ctx15)


def test_weights_normalize_series(ctx15):
    """At large s the series is dominated by its first root term."""
    p = mpf(1)
    with ctx15.workprec():
        from koshzeta.spectrum import root_table
        tab = root_table(p, ctx15, count=2)
        s = mpf(60)
        lead = tab.weights[0] * tab.roots[0] ** (-s)
        got = zeta_deformed_series(s, p, ctx15)
        assert abs(got / lead - 1) < mpf("1e-6")


def test_degeneration_large_p(ctx15):
    p = mpf(10) ** 6
    with ctx15.workprec():
        pairs = [
            (eta_deformed(mpf(-1), p, ctx15), -mpf(1) / 12),
            (zeta_deformed(mpf(-3), p, ctx15), mpf(1) / 120),
            (zeta_deformed(mpf(4), p, ctx15), mpmath.zeta(4)),
            (eta_deformed(mpf(4), p, ctx15), mpmath.zeta(4)),
        ]
    for got, want in pairs:
        assert abs(got - want) < mpf("1e-4")


def test_degeneration_small_p(ctx15):
    with ctx15.workprec():
        got = eta_deformed_series(mpf(3), mpf("1e-5"), ctx15,
                                  abs_tol=mpf("1e-8"))
        want = (2 ** mpf(-2) - 1) * mpmath.zeta(3)
    assert abs(got - want) < mpf("1e-4")


def test_conjugate_symmetry(ctx15):
    s = mpc("1.7", "2.2")
    v1 = eta_deformed_series(s, mpf(1), ctx15)
    v2 = eta_deformed_series(mpmath.conj(s), mpf(1), ctx15)
    assert abs(v1 - mpmath.conj(v2)) < mpf("1e-10")
