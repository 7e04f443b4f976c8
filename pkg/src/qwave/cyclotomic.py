"""Cyclotomic, inverse cyclotomic and all-ones polynomials.

Sign convention: ``cyclotomic(1) == 1 - x`` while ``cyclotomic(d)`` for
``d > 1`` is the usual monic polynomial.  With that choice the factorisation
``1 - x**n == prod(cyclotomic(d) for d | n)`` holds on the nose, which is the
form the restricted partition generating function needs.
"""
from __future__ import annotations

import logging
from functools import lru_cache
from math import gcd

from .poly import Poly, poly_divrem, poly_xgcd

log = logging.getLogger(__name__)

__all__ = [
    "divisors",
    "totient",
    "cyclotomic",
    "inverse_cyclotomic",
    "psi",
    "one_minus_x_pow",
    "monomial_rem_cyclotomic",
    "monomial_rem_binomial",
    "dresden_bezout",
]


def divisors(n: int) -> list:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def one_minus_x_pow(n: int) -> Poly:
    """The binomial ``1 - x**n``."""
    return Poly([1] + [0] * (n - 1) + [-1])


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """Phi_n with Phi_1 = 1 - x; built by dividing 1 - x**n by the proper divisors."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    p = one_minus_x_pow(n)
    for d in divisors(n)[:-1]:
        p = p.exact_div(cyclotomic(d))
    return p


@lru_cache(maxsize=None)
def inverse_cyclotomic(n: int) -> Poly:
    """Theta_n, the cofactor with Theta_n * Phi_n == 1 - x**n."""
    if n < 1:
        raise ValueError("cyclotomic index must be positive")
    return one_minus_x_pow(n).exact_div(cyclotomic(n))


@lru_cache(maxsize=None)
def psi(m: int) -> Poly:
    """1 + x + ... + x**(m-1)."""
    if m < 1:
        raise ValueError("m must be positive")
    return Poly([1] * m)


def monomial_rem_cyclotomic(k: int, m: int) -> Poly:
    """``x**k rem Phi_m`` via ``k mod m``; for even m also ``x**(r+m/2) = -x**r``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = k % m
    sign = 1
    if m % 2 == 0 and r >= m // 2:
        r -= m // 2
        sign = -1
    rem = Poly.monomial(r) % cyclotomic(m)
    return -rem if sign < 0 else rem


def monomial_rem_binomial(k: int, m: int) -> Poly:
    """``x**k rem (1 - x**m) == x**(k mod m)``."""
    if m < 1:
        raise ValueError("m must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    return Poly.monomial(k % m)


def _phi_at_one(n: int) -> int:
    # Phi_n(1) for n > 1: p if n is a prime power p**r, otherwise 1
    if n < 2:
        raise ValueError("n must exceed 1")
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else 1
    raise AssertionError("unreachable")


def _dresden_candidate(m: int, n: int):
    """Bezout pair straight from Dresden's closed forms, or None if a division fails."""
    x = Poly.x()
    phi_m, phi_n = cyclotomic(m), cyclotomic(n)
    if n % m == 0:
        c = _phi_at_one(n // m)
        lifted = cyclotomic(n // m).substitute_power(m)
        u_num = -(lifted - c)
        v_num = lifted
        u_den = phi_m * c
        v_den = phi_n * c
    else:
        d = gcd(m, n)
        m1, n1 = m // d, n // d
        s = pow(n1, -1, m1)
        t = (n * s - d) // m
        xd_minus_1 = Poly.monomial(d) - 1
        u_num = (-x) ** d * (Poly.monomial(m * t) - 1)
        v_num = Poly.monomial(n * s) - 1
        u_den = xd_minus_1 * phi_m
        v_den = xd_minus_1 * phi_n
    u, ru = poly_divrem(u_num, u_den)
    v, rv = poly_divrem(v_num, v_den)
    if ru or rv:
        return None
    return u, v


def dresden_bezout(m: int, n: int) -> tuple:
    """Polynomials ``(u, v)`` with ``u*Phi_m + v*Phi_n == 1`` for ``m < n``.

    Dresden's explicit formulas are tried first.  They are written for the
    monic ``x - 1``, so the identity is checked and the extended Euclidean
    algorithm takes over whenever the sign convention breaks it.
    """
    if not (1 <= m < n):
        raise ValueError("dresden_bezout needs 1 <= m < n")
    cand = _dresden_candidate(m, n)
    if cand is not None:
        u, v = cand
        if u * cyclotomic(m) + v * cyclotomic(n) == 1:
            return u, v
    log.debug("dresden formula rejected for (%d, %d); using xgcd", m, n)
    g, u, v = poly_xgcd(cyclotomic(m), cyclotomic(n))
    assert g == 1
    return u, v
