"""Truncated power-series arithmetic against mpmath's taylor oracle."""

import mpmath
from mpmath import mp, mpf
from hypothesis import given, settings, strategies as st

from koshzeta.pseries import Series, exp_series, expm1_series


def _taylor(f, order):
    with mp.workdps(40):
        return mpmath.taylor(f, 0, order)


def test_exp_series_matches_taylor():
    with mp.workdps(40):
        s = exp_series(12)
        ref = _taylor(mpmath.exp, 12)
        for a, b in zip(s.c, ref):
            assert abs(a - b) < mpf("1e-35")


def test_div_exp_log_roundtrip():
    with mp.workdps(40):
        e = exp_series(10)
        back = e.log()
        assert abs(back.c[1] - 1) < mpf("1e-35")
        assert all(abs(c) < mpf("1e-35") for c in back.c[2:])


def test_expm1_has_no_constant_term():
    with mp.workdps(30):
        s = expm1_series(8)
        assert s.c[0] == 0
        assert abs(s.c[3] - mpf(1) / 6) < mpf("1e-25")


def test_reversion_inverts_composition():
    with mp.workdps(40):
        f = Series([mpf(0), mpf(1), mpf("0.3"), mpf("-0.2"), mpf("0.05"),
                    mpf(0), mpf(0), mpf(0), mpf(0)])
        g = f.reversion()
        comp = f.compose(g)
        assert abs(comp.c[1] - 1) < mpf("1e-30")
        assert all(abs(c) < mpf("1e-30") for c in comp.c[2:])


@settings(deadline=None, max_examples=20)
@given(st.floats(min_value=-0.9, max_value=0.9, allow_nan=False),
       st.floats(min_value=-0.9, max_value=0.9, allow_nan=False))
def test_product_evaluation_consistent(a, b):
    """(f*g)(t) == f(t) g(t) up to the shared truncation error."""
    with mp.workdps(30):
        f = Series([mpf(1), mpf(repr(a)), mpf(repr(b))] + [mpf(0)] * 10)
        g = exp_series(12)
        t = mpf("0.01")
        lhs = (f * g)(t)
        rhs = f(t) * g(t)
        assert abs(lhs - rhs) < mpf("1e-24")
