"""Exponential-kernel sums: classical oracles and light dual routes."""

import mpmath
from mpmath import mp, mpf

import pytest

from koshzeta.omega import (
    lambert_classical, lambert_alternating, omega_sum, contour_abscissa,
)


def test_lambert_closed_forms(ctx30):
    with ctx30.workprec():
        got = lambert_classical(mp.pi, -1, ctx30)
        want = mpf(1) / 24 - 1 / (8 * mp.pi)
        assert abs(got - want) < mpf("1e-25")
        got = lambert_alternating(mp.pi, -1, ctx30)
        assert abs(got + 1 / (8 * mp.pi)) < mpf("1e-25")


def test_lambert_matches_mpmath_nsum(ctx30):
    with ctx30.workprec():
        got = lambert_classical(mpf(2), 1, ctx30)
        ref = mpmath.nsum(lambda n: n ** -3 / mpmath.expm1(4 * n),
                          [1, mpmath.inf])
        assert abs(got - ref) < mpf("1e-24")


def test_omega_routes_agree(ctx15):
    p = mpf(1)
    a = omega_sum(mpf(2), 1, p, ctx15, route="series", abs_tol=mpf("1e-10"))
    b = omega_sum(mpf(2), 1, p, ctx15, route="mellin", abs_tol=mpf("1e-10"))
    assert abs(a - b) < mpf("1e-8")


def test_omega_classical_limit(ctx15):
    # p -> inf: each term degenerates to exp(-x k), so the sum tends to
    # the polylog-type series sum k^{-3} e^{-2k}
    p = mpf(10) ** 6
    got = omega_sum(mpf(2), 1, p, ctx15, route="series",
                    abs_tol=mpf("1e-9"))
    with mp.workdps(20):
        ref = mpmath.nsum(lambda k: k ** -3 * mp.e ** (-2 * k),
                          [1, mpmath.inf])
    assert abs(got - ref) < mpf("1e-4")


def test_contour_abscissa():
    assert contour_abscissa(1) == 2
    assert contour_abscissa(0) == 2
    assert contour_abscissa(-2) == 5
