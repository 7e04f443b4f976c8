from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest

from qwave.cyclofield import CycloFieldElement as F
from qwave.grsum import ramanujan_sum, sigma_table
from qwave.poly import Poly


def test_generator_has_order_k():
    for k in range(1, 13):
        x = F.gen(k)
        assert x**k == 1
        for d in range(1, k):
            assert x**d != 1


def test_field_arithmetic():
    x = F.gen(5)
    a = 1 + 2 * x
    assert a * a.inverse() == 1
    assert (a / a) == 1
    assert x ** -1 == x**4
    assert (a - a) == 0
    assert F(5, 3).is_rational() and F(5, 3).to_rational() == 3
    with pytest.raises(ZeroDivisionError):
        (x - x).inverse()


def test_coords_length_is_totient():
    assert len(F(12, Poly([1, 2, 3])).coords) == 4
    assert F.gen(1) == 1


def test_trace_is_ramanujan_sum():
    for k in range(1, 13):
        for t in range(k):
            assert F.root(k, t).trace() == ramanujan_sum(k, t)


def test_complex_display():
    z = F.gen(4).to_complex()
    assert abs(z - 1j) < 1e-12


def test_primitive_root_sum_identity():
    # sum over primitive k-th roots eta of eta^t / ((1-eta)...(1-eta^j)) = sigma_k(t; k-1-j) / k
    for k in range(1, 11):
        tab = sigma_table(k)
        x = F.gen(k)
        for j in range(k):
            den = F(k, 1)
            for i in range(1, j + 1):
                den = den * (1 - x**i)
            for t in range(k):
                # the trace over Q sums the conjugates eta = x^h, gcd(h, k) = 1
                total = (x**t / den).trace()
                assert total == Fraction(tab[t, k - 1 - j], k), (k, t, j)


def test_trace_matches_explicit_conjugate_sum():
    k = 9
    e = F(k, Poly([1, Fraction(1, 2), 0, -3]))
    conj = sum(
        (F(k, e.poly.substitute_power(h)) for h in range(1, k) if gcd(h, k) == 1),
        F(k, 0),
    )
    assert conj.is_rational()
    assert conj.to_rational() == e.trace()
