"""Confluent hypergeometric routes against the mpmath oracle."""

import mpmath
from mpmath import mp, mpf, mpc

import pytest

from koshzeta.special import kummer_M, kummer_U


@pytest.mark.parametrize("a,b,z", [
    ("1.5", "2.5", "3"),
    ("-0.5", "1.7", "8"),
    ("2", "-0.3", "12"),
])
def test_kummer_M_matches_mpmath(a, b, z, ctx30):
    with ctx30.workprec():
        aa, bb, zz = mpf(a), mpf(b), mpf(z)
    got = kummer_M(aa, bb, zz, ctx30)
    with mp.workdps(40):
        ref = mpmath.hyp1f1(aa, bb, zz)
    assert abs(got - ref) < mpf("1e-25") * max(1, abs(ref))


@pytest.mark.parametrize("a,b,z", [
    ("2.5", "1.5", "7"),          # Laplace integral branch
    ("-1.5", "0.3", "9"),         # connection-formula branch
    ("-2.5", "-3", "11"),         # integer b: Richardson offsets
    ("-2.5", "-4.5", "20000"),    # large-argument asymptotic branch
])
def test_kummer_U_matches_mpmath(a, b, z, ctx30):
    with ctx30.workprec():
        aa, bb, zz = mpf(a), mpf(b), mpf(z)
    got = kummer_U(aa, bb, zz, ctx30)
    with mp.workdps(40):
        ref = mpmath.hyperu(aa, bb, zz)
    assert abs(got - ref) < mpf("1e-24") * max(1, abs(ref))


def test_kummer_U_complex(ctx30):
    a, b, z = mpc(2, 3), mpc(1, 3), mpf(30000)
    got = kummer_U(a, b, z, ctx30)
    with mp.workdps(40):
        ref = mpmath.hyperu(a, b, z)
    assert abs(got - ref) < mpf("1e-24") * abs(ref)
