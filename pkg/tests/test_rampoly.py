"""Laurent polynomial pairings built from Bernoulli convolutions."""

import mpmath
from mpmath import mp, mpf, mpc
from hypothesis import given, settings, strategies as st

from koshzeta.ctx import make_context
from koshzeta.rampoly import (
    ram_poly, two_term_residual, three_term_residual,
    eps1_coeff, eps2_coeff,
)


def test_classical_k2_closed_form(ctx30):
    """With classical Bernoulli numbers the k = 2 pairing is explicit:
    sum_{j} B_j B_{4-j} / (j! (4-j)!) z^{j-1}."""
    with ctx30.workprec():
        z = mpf("1.7")
        got = ram_poly(2, None, None, z, ctx30)
        B = [mpmath.bernoulli(n) for n in range(5)]
        want = sum(B[j] * B[4 - j] /
                   (mpmath.factorial(j) * mpmath.factorial(4 - j)) *
                   z ** (j - 1) for j in range(5))
        assert abs(got - want) < mpf("1e-28")


@settings(deadline=None, max_examples=15)
@given(st.floats(min_value=0.3, max_value=2.0),
       st.floats(min_value=0.0, max_value=6.28),
       st.integers(min_value=2, max_value=6),
       st.sampled_from([1, 2]))
def test_two_term_symmetry(r, th, k, kind):
    ctx = make_context(20)
    with ctx.workprec():
        z = mpf(repr(r)) * mp.e ** (mpc(0, 1) * mpf(repr(th)))
        if abs(z) < mpf("0.05"):
            return
        res = abs(two_term_residual(k, kind, mpf(1), z, ctx))
        scale = max(mpf(1), abs(ram_poly(k, kind, mpf(1), z, ctx)))
        assert res / scale < mpf("1e-15")


def test_three_term_classical_exact(ctx30):
    with ctx30.workprec():
        res = three_term_residual(3, None, None, mpf("2.3"), ctx30)
        assert abs(res) < mpf("1e-26")


def test_three_term_deformed_kind1(ctx30):
    with ctx30.workprec():
        res = three_term_residual(2, 1, mpf("0.7"), mpc("1.4", "0.3"),
                                  ctx30)
        assert abs(res) < mpf("1e-24")


def test_three_term_deformed_kind2(ctx30):
    with ctx30.workprec():
        res = three_term_residual(3, 2, mpf("1.2"), mpf("1.8"), ctx30)
        assert abs(res) < mpf("1e-24")


def test_corrections_vanish_classically(ctx30):
    with ctx30.workprec():
        p = mpf(10) ** 6
        assert abs(eps1_coeff(2, p, mpf("1.5"), ctx30)) < mpf("1e-5")
        assert abs(eps2_coeff(2, p, mpf("1.5"), ctx30)) < mpf("1e-5")
