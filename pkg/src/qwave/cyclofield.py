"""Exact arithmetic in Q[x]/Phi_k, the k-th cyclotomic field.

The class of ``x`` stands for the primitive root ``exp(2*pi*i/k)``; the root
``exp(2*pi*i*h/k)`` is then ``x**h``.  Sums over all primitive k-th roots of
a field element are traces, computed here from the multiplication matrix so
they do not depend on any closed form for Ramanujan sums.
"""
from __future__ import annotations

import cmath
from fractions import Fraction

from .cyclotomic import cyclotomic, totient
from .poly import Poly, poly_xgcd

__all__ = ["CycloFieldElement"]


class CycloFieldElement:
    __slots__ = ("k", "poly")

    def __init__(self, k: int, value=0):
        if k < 1:
            raise ValueError("k must be positive")
        if not isinstance(value, Poly):
            value = Poly([value])
        self.k = k
        self.poly = value % cyclotomic(k)

    # -- constructors -------------------------------------------------------

    @classmethod
    def gen(cls, k: int) -> "CycloFieldElement":
        """The class of x, i.e. exp(2*pi*i/k)."""
        return cls(k, Poly.x())

    @classmethod
    def root(cls, k: int, h: int) -> "CycloFieldElement":
        """exp(2*pi*i*h/k) as the class of x**(h mod k)."""
        return cls(k, Poly.monomial(h % k))

    # -- data ---------------------------------------------------------------

    @property
    def degree(self) -> int:
        return totient(self.k)

    @property
    def coords(self) -> tuple:
        c = list(self.poly.coeffs)
        return tuple(c + [Fraction(0)] * (self.degree - len(c)))

    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.poly.coeff(0)

    # -- arithmetic ---------------------------------------------------------

    def _lift(self, other) -> "CycloFieldElement":
        if isinstance(other, CycloFieldElement):
            if other.k != self.k:
                raise ValueError("elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return CycloFieldElement(self.k, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloFieldElement(self.k, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return CycloFieldElement(self.k, -self.poly)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloFieldElement(self.k, self.poly - other.poly)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return CycloFieldElement(self.k, self.poly * other.poly)

    __rmul__ = __mul__

    def inverse(self) -> "CycloFieldElement":
        if not self.poly:
            raise ZeroDivisionError("zero has no inverse")
        g, u, _ = poly_xgcd(self.poly, cyclotomic(self.k))
        assert g == 1
        return CycloFieldElement(self.k, u)

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e: int):
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        result = CycloFieldElement(self.k, 1)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloFieldElement(self.k, other)
        if not isinstance(other, CycloFieldElement):
            return NotImplemented
        return self.k == other.k and self.poly == other.poly

    def __hash__(self):
        return hash((self.k, self.poly))

    # -- invariants ---------------------------------------------------------

    def trace(self) -> Fraction:
        """Sum of all conjugates: the trace of multiplication by self."""
        phi = cyclotomic(self.k)
        total = Fraction(0)
        basis = Poly.const(1)
        for i in range(self.degree):
            total += ((self.poly * basis) % phi).coeff(i)
            basis = Poly.monomial(i + 1)
        return total

    def to_complex(self, h: int = 1) -> complex:
        """Numerical value under x -> exp(2*pi*i*h/k); for display only."""
        z = cmath.exp(2j * cmath.pi * h / self.k)
        return complex(sum(float(c) * z**i for i, c in enumerate(self.poly.coeffs)))

    def __repr__(self):
        return f"CycloFieldElement({self.k}, {self.poly!r})"

    def __str__(self):
        return f"{self.poly} mod Phi_{self.k}"
