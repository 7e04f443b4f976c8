from __future__ import annotations

from fractions import Fraction
from math import factorial, gcd

import pytest

from qwave.cyclotomic import cyclotomic
from qwave.evalop import RationalPolyExpr, eval_mod
from qwave.oracle import verify_reconstruction
from qwave.poly import Poly
from qwave.qpartial import (
    decompose,
    decompose_variant_k2,
    dm_derivative,
    gamma_table,
    h_component,
    rademacher_link,
    rademacher_top,
    split_levels,
)
from qwave.cyclofield import CycloFieldElement

X = Poly.x()
q = Fraction


def test_h_component_examples():
    assert h_component(1, 1) == 1
    assert h_component(2, 2) == q(1, 4)
    h = h_component(3, 3)
    assert h.degree <= 1
    # prod_{j != 3} Phi_j^(3//j) = (1 - x)^3 (1 + x)
    den = (1 - X) ** 3 * (1 + X)
    assert h == eval_mod(RationalPolyExpr(Poly.const(1), den), cyclotomic(3))
    with pytest.raises(ValueError):
        h_component(3, 4)


def test_dm_derivative_examples():
    assert dm_derivative(X**5, 2) == 2 * X**3
    assert dm_derivative(X, 2) == Poly()
    assert dm_derivative(3 * X**4 + X**2, 2) == 6 * X**2 + 1


def test_split_levels_examples():
    assert split_levels(Poly.const(1), 3, 3) == [1, 0, 0]
    assert split_levels(X**2, 2, 2) == [1, 1]
    with pytest.raises(ValueError):
        split_levels(X**4, 2, 2)


def _recombine(levels, m):
    b = Poly.const(1) - Poly.monomial(m)
    return sum(
        (h * b**j * q((-1) ** j, factorial(j)) for j, h in enumerate(levels)),
        Poly(),
    )


def test_split_levels_recombines():
    d = decompose(4)
    L = 2
    g = sum((d[(2, l)] * (1 - X**2) ** (L - l) for l in (1, 2)), Poly())
    levels = split_levels(g, 2, 2)
    assert all(h.degree < 2 for h in levels)
    assert _recombine(levels, 2) == g
    p = Poly([q(1, 3), -2, 5, 0, q(7, 2), 1, -1, 4])
    assert _recombine(split_levels(p, 3, 3), 3) == p


def test_decompose_examples():
    assert decompose(1).terms == {(1, 1): 1}
    d2 = decompose(2).terms
    assert d2 == {(1, 1): q(1, 4), (1, 2): q(1, 2), (2, 1): (1 - X) / 4}
    assert decompose(3)[(3, 1)] == Poly([2, -1, -1]) / 9


def test_decomposition_shape():
    for N in range(1, 11):
        d = decompose(N)
        assert set(d.terms) == {(k, l) for k in range(1, N + 1) for l in range(1, N // k + 1)}
        assert all(g.degree < k for (k, _), g in d.terms.items())


def test_reconstruction_small():
    for N in range(1, 9):
        assert verify_reconstruction(decompose(N))


def test_gamma_examples():
    assert gamma_table(4)[(0, 1, 4)] == q(1, 24)
    t2 = gamma_table(2)
    assert t2[(1, 2, 1)] == q(-1, 4)
    assert t2[(0, 1, 1)] == q(1, 4)
    for N in range(1, 10):
        assert gamma_table(N)[(0, 1, N)] == q(1, factorial(N))


def test_variant_examples():
    assert decompose_variant_k2(2)[1] == q(1, 4)
    assert decompose_variant_k2(4)[2] == q(1, 32)
    for N in range(2, 13):
        M = N // 2
        assert decompose_variant_k2(N)[M] == q(1, 2**N * factorial(M))
    with pytest.raises(ValueError):
        decompose_variant_k2(1)


def test_variant_joint_reconstruction():
    # replacing the k = 2 block by sum_l G~_l (-1)^? / (1+x)^l still gives F_N
    for N in range(2, 10):
        M = N // 2
        d = decompose(N)
        v = decompose_variant_k2(N)
        full = Poly.const(1)
        for j in range(1, N + 1):
            full = full * (1 - Poly.monomial(j))
        total = Poly()
        for (k, l), g in d.terms.items():
            if k == 2:
                continue
            total = total + g * full.exact_div((1 - Poly.monomial(k)) ** l)
        for l in range(1, M + 1):
            total = total + full.exact_div((1 + X) ** l) * v[l]
        assert total == 1, N


def test_periodicity_of_top_level():
    tables = {N: gamma_table(N) for N in range(1, 19)}

    def scaled(j, k, N):
        L = N // k
        return k ** (L + 2) * factorial(L) * tables[N][(j, k, L)]

    for k in range(1, 7):
        for N in range(k, 19 - k):
            for j in range(k):
                assert scaled(j, k, N) == scaled(j, k, N + k), (j, k, N)


def test_rademacher_examples():
    assert rademacher_top(0, 1, 2).value == q(1, 2)
    assert rademacher_top(0, 1, 3).value == q(-1, 6)
    assert rademacher_top(1, 2, 2).value == q(1, 4)
    for h in (1, 2):
        c = rademacher_top(h, 3, 3)
        # |C| = 1/9: C * conj(C) is the norm in Q(zeta_3)
        conj = CycloFieldElement(3, c.value.poly.substitute_power(2))
        assert (c.value * conj) == q(1, 81)
    with pytest.raises(ValueError):
        rademacher_top(2, 4, 4)


def test_rademacher_link():
    for N in range(1, 11):
        d = decompose(N)
        for k in range(1, N + 1):
            for h in range(k):
                if gcd(h, k) == 1:
                    lhs, rhs = rademacher_link(h, k, N, d)
                    assert lhs == rhs, (h, k, N)
