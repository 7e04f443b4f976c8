from __future__ import annotations

from fractions import Fraction

import pytest

from qwave.cyclotomic import (
    cyclotomic,
    divisors,
    dresden_bezout,
    inverse_cyclotomic,
    monomial_rem_binomial,
    monomial_rem_cyclotomic,
    one_minus_x_pow,
    psi,
    totient,
)
from qwave.poly import Poly, poly_divrem, poly_xgcd

X = Poly.x()


def test_cyclotomic_examples():
    assert cyclotomic(1) == 1 - X
    assert cyclotomic(4) == 1 + X**2
    assert cyclotomic(6) == X**2 - X + 1
    with pytest.raises(ValueError):
        cyclotomic(0)


def test_inverse_cyclotomic_examples():
    assert inverse_cyclotomic(1) == 1
    assert inverse_cyclotomic(2) == 1 - X
    assert inverse_cyclotomic(4) == 1 - X**2


def test_psi_examples():
    assert psi(1) == 1
    assert psi(3) == Poly([1, 1, 1])
    assert psi(5) == Poly([1] * 5)


def test_monomial_rem_examples():
    assert monomial_rem_cyclotomic(5, 3) == Poly([-1, -1])
    assert monomial_rem_cyclotomic(7, 4) == -X
    assert monomial_rem_cyclotomic(0, 5) == 1
    assert monomial_rem_binomial(7, 3) == X
    assert monomial_rem_binomial(6, 3) == 1
    assert monomial_rem_binomial(2, 5) == X**2


def test_product_over_divisors():
    for n in range(1, 61):
        prod = Poly.const(1)
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        assert prod == one_minus_x_pow(n)
        assert inverse_cyclotomic(n) * cyclotomic(n) == one_minus_x_pow(n)
        assert cyclotomic(n).degree == totient(n)


def test_pairwise_coprime():
    for m in range(1, 41):
        for n in range(m + 1, 41):
            assert poly_xgcd(cyclotomic(m), cyclotomic(n))[0] == 1


def test_monomial_rem_matches_division():
    for m in range(2, 31):
        for k in range(0, 201, 7):
            assert monomial_rem_cyclotomic(k, m) == poly_divrem(Poly.monomial(k), cyclotomic(m))[1]


def test_dresden_examples():
    for m, n in [(2, 4), (2, 3)]:
        u, v = dresden_bezout(m, n)
        assert u * cyclotomic(m) + v * cyclotomic(n) == 1
    u, v = dresden_bezout(1, 2)
    assert u == Fraction(1, 2) and v == Fraction(1, 2)
    with pytest.raises(ValueError):
        dresden_bezout(3, 3)


def test_dresden_identity_all_pairs():
    for n in range(2, 31):
        for m in range(1, n):
            u, v = dresden_bezout(m, n)
            assert u * cyclotomic(m) + v * cyclotomic(n) == 1
