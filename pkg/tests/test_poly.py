from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwave.poly import (
    Poly,
    poly_divrem,
    poly_xgcd,
    series_div,
    series_mul,
    taylor_coeffs,
    taylor_shift,
)

from conftest import nonconstant_polys, polys, small_fractions

X = Poly.x()


def test_canonical_form_strips_trailing_zeros():
    p = Poly([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert Poly([0, 0]).coeffs == ()
    assert Poly().degree == -1


def test_coefficients_are_fractions():
    p = Poly([1, Fraction(1, 2)])
    assert all(isinstance(c, Fraction) for c in p.coeffs)


def test_immutable():
    p = Poly([1, 2])
    with pytest.raises(AttributeError):
        p.coeffs = (3,)


def test_arithmetic_basics():
    assert (1 - X) * (1 + X) == 1 - X**2
    assert (X + 1) ** 3 == Poly([1, 3, 3, 1])
    assert (Poly([2, 4]) / 2) == Poly([1, 2])
    assert Poly([1, 2, 3])(2) == 17
    assert str(Poly([Fraction(1, 4), Fraction(-1, 4)])) == "1/4 - 1/4*x"


def test_divrem_examples():
    assert poly_divrem(X**2 - 1, X - 1) == (X + 1, Poly())
    assert poly_divrem(X, X**2) == (Poly(), X)
    assert poly_divrem(1 - X**4, 1 + X**2) == (1 - X**2, Poly())


def test_divrem_zero_divisor():
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        poly_divrem(X, Poly())


def test_exact_div_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (X**2 + 1).exact_div(X - 1)


def test_xgcd_examples():
    g, u, v = poly_xgcd(1 - X, 1 + X)
    assert g == 1 and u == Fraction(1, 2) and v == Fraction(1, 2)
    g, u, v = poly_xgcd(X - 1, X - 1)
    assert g == X - 1
    assert u * (X - 1) + v * (X - 1) == g
    g, u, v = poly_xgcd(1 + X, 1 + X**2)
    assert g == 1
    assert u == (1 - X) / 2 and v == Fraction(1, 2)


def test_xgcd_both_zero():
    with pytest.raises(ValueError):
        poly_xgcd(Poly(), Poly())


def test_taylor_examples():
    assert taylor_coeffs(Poly.const(1), 1 - X, 0, 4) == [1, 1, 1, 1]
    # the (1 - x) basis values 3/(1+x+x^2) -> [1, 1] and 2/(1+x^3) -> [1, 3/2]
    # read in the (x - 1) basis used here flip the sign of odd coefficients
    assert taylor_coeffs(Poly.const(3), Poly([1, 1, 1]), 1, 2) == [1, -1]
    assert taylor_coeffs(Poly.const(2), Poly([1, 0, 0, 1]), 1, 2) == [1, Fraction(-3, 2)]


def test_taylor_pole():
    with pytest.raises(ZeroDivisionError, match="pole at expansion center"):
        taylor_coeffs(Poly.const(1), 1 - X, 1, 3)


def test_taylor_shift():
    # (x + 1)^2 = (x - 1)^2 + 4(x - 1) + 4
    assert taylor_shift((X + 1) ** 2, 1) == [4, 4, 1]


def test_series_division_inverts_multiplication():
    a = [Fraction(1), Fraction(2), Fraction(-1)]
    b = [Fraction(1), Fraction(-3)]
    prod = series_mul(a, b, 6)
    assert series_div(prod, b, 3) == a


def test_powmod_and_substitute():
    m = 1 + X**2
    assert X.powmod(7, m) == -X
    assert (1 - X).substitute_power(3) == 1 - X**3


@settings(max_examples=80, deadline=None)
@given(polys(30), polys(12, nonzero=True))
def test_divrem_reconstructs(a, b):
    q, r = poly_divrem(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=60, deadline=None)
@given(polys(10), polys(10))
def test_xgcd_identity(a, b):
    if not a and not b:
        return
    g, u, v = poly_xgcd(a, b)
    assert u * a + v * b == g
    assert g.lc == 1
    assert a % g == Poly() and b % g == Poly()


@settings(max_examples=60, deadline=None)
@given(polys(6), nonconstant_polys(5), small_fractions, st.integers(min_value=1, max_value=6))
def test_taylor_resummation(num, den, center, order):
    if den(center) == 0:
        return
    coeffs = taylor_coeffs(num, den, center, order)
    shift = Poly([-center, 1])
    approx = sum((shift**n * a for n, a in enumerate(coeffs)), Poly())
    residual = den * approx - num
    assert residual % shift**order == Poly()
