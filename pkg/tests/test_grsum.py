from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest

from qwave.cyclotomic import totient
from qwave.grsum import (
    gamma_top_fast,
    gamma_top_table,
    mobius,
    ramanujan_sum,
    sigma_bounds_check,
    sigma_sieved,
    sigma_table,
    sigma_table_sieved,
)
from qwave.qpartial import decompose, gamma_table
from qwave.poly import Poly
from qwave.verify import case_table_k2_k3


def test_mobius():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_ramanujan_examples():
    assert ramanujan_sum(4, 0) == 2
    assert ramanujan_sum(3, 1) == -1
    assert ramanujan_sum(4, 2) == -2
    for k in range(1, 20):
        assert ramanujan_sum(k, 0) == totient(k)
        for t in range(-k, 2 * k):
            assert ramanujan_sum(k, t) == ramanujan_sum(k, -t) == ramanujan_sum(k, t % k)


def test_sigma_examples():
    assert sigma_table(2).rows() == [[1, 2], [-1, -2]]
    assert sigma_table(1).rows() == [[1]]
    assert sigma_sieved(2, 0, 1) == 2
    assert sigma_sieved(5, 2, 3) == sigma_table(5)[2, 3]
    for k in range(1, 8):
        for t in range(k):
            assert sigma_sieved(k, t, 0) == ramanujan_sum(k, t)
    with pytest.raises(ValueError):
        sigma_sieved(3, 0, 3)


def test_sigma_columns():
    for k in range(1, 25):
        tab = sigma_table(k)
        for t in range(k):
            assert tab[t, 0] == ramanujan_sum(k, t)
            assert tab[t, k - 1] == k * ramanujan_sum(k, t)


def test_recurrence_equals_sieved():
    for k in range(1, 41):
        tab = sigma_table(k)
        assert tab == sigma_table_sieved(k)
        for t in range(0, k, max(1, k // 5)):
            for j in range(k):
                assert tab[t, j] == sigma_sieved(k, t, j)


def test_k_minus_2_identity():
    for k in range(2, 31):
        tab = sigma_table(k)
        for t in range(k):
            # 1/(1 - eta) = -(1/k) sum_s s eta^s for a primitive k-th root eta
            expected = -sum(s * ramanujan_sum(k, t + s) for s in range(1, k))
            assert tab[t, k - 2] == expected, (k, t)


def test_bounds():
    for k in (1, 2, 12):
        assert all(sigma_bounds_check(k).values())
    for k in range(1, 41):
        assert all(sigma_bounds_check(k).values()), k


def test_gamma_top_examples():
    assert gamma_top_fast(0, 2, 2) == Fraction(1, 4)
    for N in range(1, 10):
        assert gamma_top_fast(0, 1, N) == Fraction(1, factorial(N))
    assert gamma_top_fast(1, 3, 3) == Fraction(-1, 9)
    assert sigma_table(3)[2, 2] == -3
    with pytest.raises(ValueError):
        gamma_top_fast(3, 3, 3)


def test_gamma_top_matches_decomposition():
    for N in range(1, 13):
        full = gamma_table(N)
        top = gamma_top_table(N)
        for key, value in top.entries.items():
            assert full[key] == value, (N, key)


def test_case_tables():
    for N in range(2, 14):
        d = decompose(N)
        for k in (2, 3):
            if k > N:
                continue
            L = N // k
            from_fast = sum(
                (gamma_top_fast(j, k, N) * Poly.monomial(j) for j in range(k)),
                Poly(),
            )
            assert from_fast == case_table_k2_k3(k, N) == d[(k, L)], (N, k)
