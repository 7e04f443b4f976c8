"""Degenerate Bernoulli/Euler Taylor data and the first- and second-wave coefficients.

Every series here is a raw Taylor coefficient list ``t_0, t_1, ...`` of an
explicit rational function:

    bernoulli, +1 : m(1-x)/(1-x^m)   in powers of (1-x)
    euler,     +1 : 2/(1+x^m)        in powers of (1-x)
    euler,     -1 : 2/(1-x^m)        in powers of (1+x), m odd
    bernoulli, -1 : m(1+x)/(1-x^m)   in powers of (1+x), m even

The usual degenerate numbers are these coefficients up to a sign and a
factorial, and the literature disagrees on which.  Storing the raw
coefficients sidesteps the question; the closed forms built from them are
checked against the decomposition instead.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .cyclotomic import one_minus_x_pow, psi
from .poly import Poly, series_mul, taylor_coeffs

__all__ = [
    "DegSeries",
    "deg_series",
    "w1_coeffs",
    "w2_factor_series",
    "w2_coeffs",
    "w1_recurrence_check",
    "w2_recurrence_check",
]

KINDS = ("bernoulli", "euler")


@dataclass(frozen=True)
class DegSeries:
    m: int
    center: int
    kind: str
    coeffs: tuple

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)


def deg_series(kind: str, center: int, m: int, order: int) -> DegSeries:
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if center not in (1, -1):
        raise ValueError("center must be +1 or -1")
    if m < 1 or order < 1:
        raise ValueError("m and order must be positive")
    if center == 1:
        if kind == "bernoulli":
            num, den = Poly.const(m), psi(m)
        else:
            num, den = Poly.const(2), Poly([1] + [0] * (m - 1) + [1])
        # taylor_coeffs works in (x - 1); flip to (1 - x)
        raw = taylor_coeffs(num, den, 1, order)
        coeffs = [c if i % 2 == 0 else -c for i, c in enumerate(raw)]
    else:
        if kind == "euler":
            if m % 2 == 0:
                raise ValueError("euler series about -1 needs odd m")
            num, den = Poly.const(2), one_minus_x_pow(m)
        else:
            if m % 2:
                raise ValueError("bernoulli series about -1 needs even m")
            # cancel the simple zero of 1 - x^m at x = -1 against the (1+x)
            num, den = Poly.const(m), one_minus_x_pow(m).exact_div(Poly([1, 1]))
        coeffs = taylor_coeffs(num, den, -1, order)
    return DegSeries(m, center, kind, tuple(coeffs))


def _product(series_list, order: int) -> list:
    acc = [Fraction(1)] + [Fraction(0)] * (order - 1)
    for s in series_list:
        acc = series_mul(acc, list(s), order)
    return acc


def w1_coeffs(N: int) -> list:
    """[Gamma_{0,1,l}(N) for l = 1..N].

    Gamma_{0,1,N-j}(N) is (1/N!) times the coefficient of (1-x)^j in
    prod_{i=2}^{N} i(1-x)/(1-x^i).
    """
    if N < 1:
        raise ValueError("N must be positive")
    prod = _product((deg_series("bernoulli", 1, i, N).coeffs for i in range(2, N + 1)), N)
    scale = Fraction(1, factorial(N))
    return [prod[N - l] * scale for l in range(1, N + 1)]


def w2_factor_series(m: int, order: int) -> list:
    """Series of 1/(1-x^m) (m odd) or (1+x)/(1-x^m) (m even) in powers of (1+x)."""
    if m % 2:
        s = deg_series("euler", -1, m, order)
        return [c / 2 for c in s.coeffs]
    s = deg_series("bernoulli", -1, m, order)
    return [c / m for c in s.coeffs]


def _w2_raw(N: int, order: int) -> list:
    return _product((w2_factor_series(m, order) for m in range(1, N + 1)), order)


def w2_coeffs(N: int) -> list:
    """[Gamma~_{0,2,l}(N) for l = 1..N//2] from the product of per-part series."""
    if N < 2:
        raise ValueError("N must be at least 2")
    M = N // 2
    prod = _w2_raw(N, M)
    return [prod[M - l] for l in range(1, M + 1)]


def w1_recurrence_check(N: int) -> bool:
    """Check Gamma_{0,1,N-j}(N+1) = 1/(N+1) sum_k t_k(N+1) Gamma_{0,1,N-j-1+k}(N).

    ``t_k(N+1)`` are the raw bernoulli/+1 coefficients for m = N+1.  The
    range is -1 <= j <= N-2, where every Gamma on the right has level >= 1.
    """
    lhs = w1_coeffs(N + 1)  # index l-1
    rhs_tab = w1_coeffs(N)
    t = deg_series("bernoulli", 1, N + 1, N + 1).coeffs
    for j in range(-1, N - 1):
        rhs = Fraction(0)
        for k in range(0, j + 2):
            rhs += t[k] * rhs_tab[N - j - 1 + k - 1]
        if lhs[N - j - 1] != rhs / (N + 1):
            return False
    return True


def w2_recurrence_check(N: int) -> bool:
    """Check the one-step recurrence from N to N+1 for Gamma~_{0,2,l}.

    With c_i(N) = Gamma~_{0,2,N//2 - i}(N) and t_k the (1+x)-series of the
    new factor for m = N+1: c_i(N+1) = sum_{k<=i} t_k c_{i-k}(N), for every
    i that is defined on both sides.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    M, M1 = N // 2, (N + 1) // 2
    old = w2_coeffs(N)
    new = w2_coeffs(N + 1)
    c_old = [old[M - 1 - i] for i in range(M)]
    c_new = [new[M1 - 1 - i] for i in range(M1)]
    t = w2_factor_series(N + 1, M1)
    for i in range(min(M, M1)):
        if c_new[i] != sum(t[k] * c_old[i - k] for k in range(i + 1)):
            return False
    return True
