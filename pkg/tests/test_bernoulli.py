"""Generalized Bernoulli families: route agreement and classical limits."""

import mpmath
from mpmath import mp, mpf

from koshzeta.bernoulli import (
    b2_via_zeta, b2_via_integral, b2_gf_fit,
    b1_via_series, b1_via_integral, b1_via_zeta,
    classical_bernoulli_mpf,
)
from koshzeta.zeta import amplitude


def test_b2_first_values(ctx30):
    p = mpf("1.3")
    with ctx30.workprec():
        assert b2_via_zeta(0, p, ctx30) == 1
        # first-order coefficient equals minus half the amplitude
        b1 = b2_via_zeta(1, p, ctx30)
        assert abs(b1 + amplitude(p) / 2) < mpf("1e-27")


def test_b2_routes_agree(ctx30):
    p = mpf("0.9")
    for m in (1, 2):
        vz = b2_via_zeta(2 * m, p, ctx30)
        vi = b2_via_integral(m, p, ctx30)
        assert abs(vz - vi) < mpf("1e-24")


def test_b1_routes_agree(ctx30):
    p = mpf("1.7")
    series = b1_via_series(4, p, ctx30).values
    for m in (1, 2):
        vi = b1_via_integral(m, p, ctx30)
        vz = b1_via_zeta(m, p, ctx30)
        assert abs(series[2 * m] - vi) < mpf("1e-15")
        assert abs(series[2 * m] - vz) < mpf("1e-24")


def test_gf_fit_corroborates(ctx30):
    p = mpf(1)
    fit = b2_gf_fit(p, 4, ctx30).values
    for n in (1, 2, 3):
        ref = b2_via_zeta(n, p, ctx30)
        assert abs(fit[n] - ref) < mpf("1e-8")


def test_classical_limit_large_p(ctx30):
    p = mpf(10) ** 6
    with ctx30.workprec():
        for n in (2, 4):
            ref = classical_bernoulli_mpf(n)
            assert abs(b2_via_zeta(n, p, ctx30) - ref) < mpf("1e-5")
            assert abs(b1_via_series(n, p, ctx30).values[n] - ref) \
                < mpf("1e-5")


def test_odd_b2_vanish_beyond_one(ctx30):
    # zeta-route values at odd n > 1 come from trivial zeros
    p = mpf("0.6")
    assert b2_via_zeta(3, p, ctx30) == 0
    assert b2_via_zeta(5, p, ctx30) == 0
