"""Root spectrum, weights and the sigma kernel."""

import mpmath
from mpmath import mp, mpf
from hypothesis import given, settings, strategies as st

from koshzeta.spectrum import root_table, sigma_kernel, sigma_ratio
from koshzeta.ctx import make_context

# first three roots at p = 1, frozen from an independent 50-digit
# mpmath.findroot run against p*sin(pi*x) + x*cos(pi*x)
ROOTS_P1 = [
    "0.7876372941648639474289473462943659886371875832597",
    "1.671605625404777517275945982467854072237416292061",
    "2.6162135854304910878125440652878922560025628033",
]


def test_frozen_roots_p1(ctx30):
    tab = root_table(mpf(1), ctx30, count=3)
    with ctx30.workprec():
        for j, ref in enumerate(ROOTS_P1, start=1):
            assert abs(tab.roots[j - 1] - mpf(ref)) < mpf("1e-29")


def test_weights_match_formula(ctx30):
    p = mpf("0.7")
    tab = root_table(p, ctx30, count=20)
    with ctx30.workprec():
        D = p * (p + 1 / mp.pi)
        for j in range(1, 21):
            lam = tab.roots[j - 1]
            w = (p ** 2 + lam ** 2) / (D + lam ** 2)
            assert abs(tab.weights[j - 1] - w) < mpf("1e-28")


@settings(deadline=None, max_examples=15)
@given(st.floats(min_value=0.01, max_value=100.0,
                 allow_nan=False, allow_infinity=False))
def test_roots_interlace(p):
    ctx = make_context(15)
    pp = mpf(repr(p))
    tab = root_table(pp, ctx, count=30)
    with ctx.workprec():
        prev = mpf(0)
        for j in range(1, 31):
            lam = tab.roots[j - 1]
            assert j - mpf(1) / 2 < lam < j
            assert lam > prev
            res = pp * mp.sin(mp.pi * lam) + lam * mp.cos(mp.pi * lam)
            assert abs(res) < mpf("1e-12")
            prev = lam


def test_sigma_kernel_matches_direct_sum(ctx15):
    """Spectral sum with tail acceleration vs a long brute-force sum."""
    p = mpf("2")
    t = mpf("0.8")
    got = sigma_kernel(t, p, ctx15)
    with mp.workdps(40):
        tab = root_table(p, make_context(25), count=60)
        brute = mpf(0)
        for j in range(60):
            brute += tab.weights[j] * mp.e ** (-tab.roots[j] * t)
    assert abs(got - brute) < mpf("5e-13")


def test_sigma_kernel_small_argument(ctx15):
    # at tiny t the sum must still converge (switches to the tail route)
    v = sigma_kernel(mpf("1e-30"), mpf(1), ctx15)
    with mp.workdps(25):
        # leading behavior ~ 1/t from the integral part of the tail
        assert v > mpf("1e29")


def test_sigma_ratio_limits():
    with mp.workdps(25):
        assert abs(sigma_ratio(mpf("0.5"), mpf("1e8")) - 1) < mpf("1e-7")
