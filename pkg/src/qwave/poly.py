"""Dense univariate polynomials over the rationals.

A polynomial is stored as a tuple of :class:`fractions.Fraction` coefficients,
index ``i`` holding the coefficient of ``x**i``.  Trailing zeros are stripped,
so the zero polynomial is the empty tuple and ``degree`` is ``len - 1``.

Besides the ring operations the module carries the few power-series helpers
the rest of the package leans on: truncated products and quotients, and the
Taylor shift used to expand a rational function about a point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]

__all__ = [
    "Poly",
    "poly_divrem",
    "poly_xgcd",
    "taylor_shift",
    "taylor_coeffs",
    "series_mul",
    "series_div",
    "series_inv",
]


def _strip(c: list) -> tuple:
    n = len(c)
    while n and not c[n - 1]:
        n -= 1
    return tuple(c[:n])


class Poly:
    """Immutable polynomial with exact rational coefficients.

    >>> p = Poly([1, 0, -1])
    >>> p.degree
    2
    >>> divmod(p, Poly([1, 1]))
    (Poly([1, -1]), Poly([]))
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip([Fraction(c) for c in coeffs]))

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # coeffs already Fractions with no trailing zero
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> "Poly":
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    # -- queries ------------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lc = self.coeffs[-1]
        return Poly._raw(tuple(c / lc for c in self.coeffs))

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly([other])
        return NotImplemented

    def __neg__(self) -> "Poly":
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __pos__(self) -> "Poly":
        return self

    def __add__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly._raw(())
            return Poly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly._raw(_strip(out))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero scalar")
            return Poly._raw(tuple(c / other for c in self.coeffs))
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw((Fraction(1),))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other) -> tuple:
        other = Poly._coerce(other)
        if other is NotImplemented:
            return other
        return poly_divrem(self, other)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        """Quotient of an exact division; raises if there is a remainder."""
        q, r = poly_divrem(self, other)
        if r:
            raise ArithmeticError(f"{other!r} does not divide {self!r}")
        return q

    def powmod(self, e: int, modulus: "Poly") -> "Poly":
        result = Poly.const(1) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def substitute_power(self, m: int) -> "Poly":
        """Return p(x**m)."""
        if m < 1:
            raise ValueError("m must be positive")
        out = [Fraction(0)] * (m * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return Poly._raw(tuple(out))

    # -- comparison / display -----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return "Poly([" + ", ".join(_fmt(c) for c in self.coeffs) + "])"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = _fmt(mag)
            else:
                var = "x" if i == 1 else f"x^{i}"
                body = var if mag == 1 else f"{_fmt(mag)}*{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _fmt(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_divrem(a: Poly, b: Poly) -> tuple:
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if not b.coeffs:
        raise ZeroDivisionError("zero divisor")
    db = b.degree
    if a.degree < db:
        return Poly._raw(()), a
    rem = list(a.coeffs)
    lc = b.coeffs[-1]
    bc = b.coeffs
    q = [Fraction(0)] * (a.degree - db + 1)
    for i in range(a.degree - db, -1, -1):
        c = rem[i + db]
        if not c:
            continue
        c = c / lc
        q[i] = c
        for j in range(db + 1):
            if bc[j]:
                rem[i + j] -= c * bc[j]
    return Poly._raw(_strip(q)), Poly._raw(_strip(rem[:db]))


def poly_xgcd(a: Poly, b: Poly) -> tuple:
    """Extended Euclid: ``(g, u, v)`` with ``u*a + v*b = g`` and ``g`` monic."""
    if not a and not b:
        raise ValueError("gcd of two zero polynomials is undefined")
    r0, s0, t0 = a, Poly.const(1), Poly()
    r1, s1, t1 = b, Poly(), Poly.const(1)
    while r1:
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.lc
    return r0 / lc, s0 / lc, t0 / lc


def taylor_shift(p: Poly, center: Scalar, order: int | None = None) -> list:
    """Coefficients of ``p(center + u)`` in powers of ``u``.

    Repeated synthetic division by ``x - center``; each remainder is the next
    coefficient.  With ``order`` set only the first ``order`` are produced.
    """
    center = Fraction(center)
    cur = list(p.coeffs)
    n = len(cur) if order is None else min(order, len(cur))
    out = []
    for _ in range(n):
        # synthetic division of cur by (x - center)
        acc = Fraction(0)
        quot = [Fraction(0)] * (len(cur) - 1)
        for i in range(len(cur) - 1, -1, -1):
            acc = acc * center + cur[i]
            if i:
                quot[i - 1] = acc
        out.append(acc)
        cur = quot
    if order is not None:
        out.extend([Fraction(0)] * (order - len(out)))
    return out


def series_mul(a: Sequence, b: Sequence, order: int) -> list:
    """Truncated product of two power series given by coefficient lists."""
    out = [Fraction(0)] * order
    for i, ai in enumerate(a[:order]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order - i]):
            out[i + j] += ai * bj
    return out


def series_div(num: Sequence, den: Sequence, order: int) -> list:
    """Truncated quotient ``num/den`` of power series; ``den[0]`` must be nonzero."""
    if not den or not den[0]:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    d0 = Fraction(den[0])
    out = []
    for n in range(order):
        acc = Fraction(num[n]) if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * out[n - i]
        out.append(acc / d0)
    return out


def series_inv(den: Sequence, order: int) -> list:
    return series_div([1], den, order)


def taylor_coeffs(num: Poly, den: Poly, center: Scalar, order: int) -> list:
    """First ``order`` Taylor coefficients of ``num/den`` in powers of ``x - center``.

    >>> taylor_coeffs(Poly([1]), Poly([1, -1]), 0, 4)
    [Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1)]
    """
    if order < 1:
        raise ValueError("order must be at least 1")
    d = taylor_shift(den, center, order)
    if not d[0]:
        raise ZeroDivisionError("pole at expansion center")
    n = taylor_shift(num, center, order)
    return series_div(n, d, order)
