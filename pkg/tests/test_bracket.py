"""Bracket kernel: routes against an mpmath.quad oracle and each other."""

import mpmath
from mpmath import mp, mpf, mpc
from hypothesis import given, settings, strategies as st

import pytest

from koshzeta.ctx import make_context
from koshzeta.bracket import (
    bracket_integral, bracket_kummer, bracket_mellin_sub, bracket_lattice,
    exp_p_series, exp_p_mellin, nu_of,
)


def _oracle(s, k, p, dps=35):
    """Independent quadrature of the defining integral via mpmath.quad."""
    with mp.workdps(dps):
        kn = k * nu_of(mpf(p))

        def f(x):
            return mp.e ** (-x) * ((kn - x) / (kn + x)) ** k * x ** (s - 1)

        val = mpmath.quad(f, [0, kn, kn + 30 + 3 * mp.dps])
        return val / mpmath.gamma(s)


@pytest.mark.parametrize("s,k,p", [
    (mpf("2.5"), 1, "1"),
    (mpf("0.8"), 3, "0.5"),
    (mpc(2, 3), 2, "2"),
])
def test_routes_match_quad_oracle(s, k, p, ctx30):
    pp = mpf(p)
    ref = _oracle(s, k, pp, dps=40)
    for route in (bracket_integral, bracket_kummer, bracket_mellin_sub):
        got = route(s, k, pp, ctx30)
        assert abs(got - ref) < mpf("1e-25"), route.__name__


def test_kummer_is_entire(ctx30):
    # negative real part: only the finite Kummer sum applies there
    v = bracket_kummer(mpf("-2.5"), 2, mpf(1), ctx30)
    assert mp.isfinite(v)
    # elementary value at s = -1
    with ctx30.workprec():
        ref = 1 + 1 / (mp.pi * mpf(1))
    got = bracket_kummer(mpf(-1), 5, mpf(1), ctx30)
    assert abs(got - ref) < mpf("1e-24")


def test_lattice_agrees_with_kummer(ctx30):
    pp = mpf("0.7")
    lat = bracket_lattice(pp, ctx30)
    with ctx30.workprec():
        br = lat.brackets(mpf("1.25"), [1, 2, 9, 40], mpf("1e-26"))
        for k in (1, 2, 9, 40):
            ref = bracket_kummer(mpf("1.25"), k, pp, ctx30)
            assert abs(br[k] - ref) < mpf("1e-24")


@settings(deadline=None, max_examples=10)
@given(st.floats(min_value=0.5, max_value=4.0),
       st.integers(min_value=1, max_value=6))
def test_conjugate_symmetry(sig, k):
    """Real-kernel property: value at conj(s) is conj of value at s."""
    ctx = make_context(15)
    s = mpc(repr(sig), "1.3")
    v1 = bracket_kummer(s, k, mpf(1), ctx)
    v2 = bracket_kummer(mpmath.conj(s), k, mpf(1), ctx)
    assert abs(v1 - mpmath.conj(v2)) < mpf("1e-12")


def test_exp_kernel_routes_agree(ctx30):
    pp = mpf("1.5")
    s = exp_p_series(mpf("2"), mpf("3"), 2, pp, ctx30)
    m = exp_p_mellin(mpf("2"), mpf("3"), 2, pp, ctx30)
    assert abs(s - m) < mpf("1e-22")


def test_exp_kernel_series_domain(ctx30):
    from koshzeta.errors import DomainError
    with pytest.raises(DomainError):
        exp_p_series(mpf("100"), mpf("3"), 1, mpf("0.5"), ctx30)
