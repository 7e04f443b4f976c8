"""The polynomial-valued ``eval`` operator.

``eval(r/s; a)`` is ``(alpha*r) rem a`` where ``alpha`` inverts ``s`` modulo
``a``.  It is the numerator produced for the factor ``a`` by the extended
cover-up method, and everything in :mod:`qwave.qpartial` is assembled from it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import Poly, poly_divrem, poly_xgcd, taylor_coeffs, series_mul

__all__ = [
    "RationalPolyExpr",
    "EvalUndefined",
    "eval_mod",
    "eval_mod_power",
    "eval_taylor",
    "eval_taylor_product",
    "cover_up",
    "psi_power_rem",
]


class EvalUndefined(ValueError):
    """Denominator and modulus share a factor."""


@dataclass(frozen=True)
class RationalPolyExpr:
    numerator: Poly
    denominator: Poly

    def __post_init__(self):
        if not isinstance(self.numerator, Poly):
            object.__setattr__(self, "numerator", Poly([self.numerator]))
        if not isinstance(self.denominator, Poly):
            object.__setattr__(self, "denominator", Poly([self.denominator]))
        if not self.denominator:
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def of(cls, expr) -> "RationalPolyExpr":
        if isinstance(expr, RationalPolyExpr):
            return expr
        return cls(expr if isinstance(expr, Poly) else Poly([expr]), Poly.const(1))


def _inverse_mod(s: Poly, a: Poly) -> Poly:
    g, u, _ = poly_xgcd(s % a if a.degree > 0 else s, a)
    if g != 1:
        raise EvalUndefined("eval undefined: shared factor")
    return u


def eval_mod(expr, modulus: Poly) -> Poly:
    """``eval(r/s; a)`` by one extended gcd against the whole modulus."""
    expr = RationalPolyExpr.of(expr)
    if modulus.degree < 1:
        raise ValueError("modulus must be nonconstant")
    alpha = _inverse_mod(expr.denominator, modulus)
    return (alpha * expr.numerator) % modulus


def _linear_root(base: Poly) -> Fraction:
    return -base.coeffs[0] / base.coeffs[1]


def eval_mod_power(expr, base: Poly, k: int, bezout: tuple | None = None) -> Poly:
    """``eval(r/s; base**k)`` without an extended gcd against ``base**k``.

    A linear base goes through the Taylor expansion about its root.  Otherwise
    the iterated partial-fraction scheme is used: with ``a1*base + a2*s == 1``,
    the result is ``sum_j ((a2 * a1**j rem s) rem base) * base**j``.  A known
    Bezout pair ``(a1, a2)`` may be passed in to skip the gcd.
    """
    expr = RationalPolyExpr.of(expr)
    if k < 1:
        raise ValueError("k must be positive")
    if base.degree < 1:
        raise ValueError("base must be nonconstant")
    modulus = base**k
    if base.degree == 1:
        center = _linear_root(base)
        try:
            inv = eval_taylor(expr.denominator, center, k)
        except ZeroDivisionError:
            raise EvalUndefined("eval undefined: shared factor") from None
        return (inv * expr.numerator) % modulus
    s = expr.denominator
    if bezout is None:
        g, a1, a2 = poly_xgcd(base, s)
        if g != 1:
            raise EvalUndefined("eval undefined: shared factor")
    else:
        a1, a2 = bezout
    a1 = a1 % s if s.degree > 0 else Poly()
    a1j = Poly.const(1)
    acc = Poly()
    base_j = Poly.const(1)
    for j in range(k):
        acc = acc + ((a2 * a1j) % base) * base_j
        base_j = base_j * base
        a1j = (a1j * a1) % s if s.degree > 0 else Poly()
    return (acc * expr.numerator) % modulus


def eval_taylor(f2: Poly, center, k: int) -> Poly:
    """``eval(1/f2; (x - center)**k)`` as the degree ``< k`` Taylor polynomial."""
    if not isinstance(f2, Poly):
        f2 = Poly([f2])
    coeffs = taylor_coeffs(Poly.const(1), f2, center, k)
    shift = Poly([-Fraction(center), 1])
    out = Poly()
    power = Poly.const(1)
    for a in coeffs:
        out = out + power * a
        power = power * shift
    return out


def eval_taylor_product(factors: Sequence[Poly], center, k: int) -> Poly:
    """``eval(1/(f_1*...*f_m); (x - center)**k)`` as a sum of products.

    Each ``1/f_j`` is expanded separately about ``center`` and the truncated
    series are multiplied, so no large product polynomial is formed.
    """
    series = [Fraction(1)] + [Fraction(0)] * (k - 1)
    for f in factors:
        series = series_mul(series, taylor_coeffs(Poly.const(1), f, center, k), k)
    shift = Poly([-Fraction(center), 1])
    out = Poly()
    power = Poly.const(1)
    for a in series:
        out = out + power * a
        power = power * shift
    return out


def cover_up(f: Poly, factors: Sequence[Poly]) -> list:
    """Extended cover-up: numerators ``n_j`` with ``f/prod(p) == sum(n_j/p_j)``."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    for p in factors:
        if p.degree < 1:
            raise ValueError("factors must be nonconstant")
    total = Poly.const(1)
    for p in factors:
        total = total * p
    if f.degree >= total.degree:
        raise ValueError("deg(f) must be below the degree of the product")
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            if poly_xgcd(factors[i], factors[j])[0] != 1:
                raise ValueError("factors are not pairwise coprime")
    out = []
    for j, p in enumerate(factors):
        others = Poly.const(1)
        for i, q in enumerate(factors):
            if i != j:
                others = others * q
        out.append(eval_mod(RationalPolyExpr(f, others), p))
    return out


def psi_power_rem(m: int, j: int) -> Poly:
    """``Psi_m(x)**j rem (1 + x**m)`` by repeated multiply-and-reduce."""
    if m < 1:
        raise ValueError("m must be positive")
    if j < 0:
        raise ValueError("j must be nonnegative")
    modulus = Poly([1] + [0] * (m - 1) + [1])
    psi_m = Poly([1] * m) % modulus
    out = Poly.const(1)
    for _ in range(j):
        out = (out * psi_m) % modulus
    return out
