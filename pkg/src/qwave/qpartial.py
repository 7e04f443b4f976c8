"""q-partial fractions of F_N(x) = 1/prod_{k<=N}(1 - x^k).

The decomposition is

    F_N(x) = sum_{k=1}^{N} sum_{l=1}^{N//k} g_kl(x) / (1 - x^k)^l,   deg g_kl < k,

and ``Gamma[h, k, l]`` is the coefficient of ``x^h`` in ``g_kl``.  Each k is
handled on its own: the cover-up numerator ``h_k`` modulo ``Phi_k^(N//k)`` is
built factor by factor, lifted to the ``(1 - x^k)^(N//k)`` denominator with
the inverse cyclotomic polynomial, then split into levels with ``D_k``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd

from .cyclofield import CycloFieldElement
from .cyclotomic import cyclotomic, dresden_bezout, inverse_cyclotomic, one_minus_x_pow
from .evalop import eval_mod_power, RationalPolyExpr
from .poly import Poly, taylor_coeffs

__all__ = [
    "QPFDecomposition",
    "GammaTable",
    "VariantK2Table",
    "RademacherTop",
    "h_component",
    "dm_derivative",
    "split_levels",
    "decompose",
    "gamma_table",
    "decompose_variant_k2",
    "rademacher_top",
    "rademacher_link",
]


@dataclass(frozen=True)
class QPFDecomposition:
    N: int
    terms: dict = field(repr=False)

    def __getitem__(self, kl) -> Poly:
        return self.terms[kl]

    def keys(self):
        return sorted(self.terms)


@dataclass(frozen=True)
class GammaTable:
    N: int
    entries: dict = field(repr=False)

    def __getitem__(self, hkl) -> Fraction:
        return self.entries.get(hkl, Fraction(0))

    def levels(self, k: int) -> list:
        return sorted({l for (_, kk, l) in self.entries if kk == k})


@dataclass(frozen=True)
class VariantK2Table:
    """Gamma~_{02l}(N): the coefficients of 1/(1+x)^l replacing the k=2 terms."""

    N: int
    entries: dict = field(repr=False)

    def __getitem__(self, l: int) -> Fraction:
        return self.entries[l]


@dataclass(frozen=True)
class RademacherTop:
    h: int
    k: int
    N: int
    value: CycloFieldElement
    approx: tuple  # (real, imag) decimal strings, display only

    @property
    def level(self) -> int:
        return self.N // self.k


def _check_range(N: int, k: int):
    if N < 1:
        raise ValueError("N must be positive")
    if not 1 <= k <= N:
        raise ValueError(f"k={k} out of range 1..{N}")


def _inverse_factor_mod(j: int, k: int, L: int) -> Poly:
    """eval(1/Phi_j; Phi_k**L) for j != k."""
    base = cyclotomic(k)
    if base.degree == 1:
        return eval_mod_power(RationalPolyExpr(Poly.const(1), cyclotomic(j)), base, L)
    # dresden_bezout orders its arguments; map (u, v) onto (a1*base + a2*Phi_j = 1)
    if k < j:
        a1, a2 = dresden_bezout(k, j)
    else:
        a2, a1 = dresden_bezout(j, k)
    return eval_mod_power(RationalPolyExpr(Poly.const(1), cyclotomic(j)), base, L, bezout=(a1, a2))


def h_component(N: int, k: int) -> Poly:
    """h_k = eval(prod_{j != k} Phi_j^{-(N//j)}; Phi_k^(N//k)).

    Built as a product of the factor evals, reducing after every multiply.
    """
    _check_range(N, k)
    L = N // k
    if N == 1:
        return Poly.const(1)
    modulus = cyclotomic(k) ** L
    acc = Poly.const(1)
    for j in range(1, N + 1):
        if j == k:
            continue
        inv = _inverse_factor_mod(j, k, L)
        acc = (acc * inv.powmod(N // j, modulus)) % modulus
    return acc


def dm_derivative(h: Poly, m: int) -> Poly:
    """D_m(x^k) = (k // m) x^(k - m), extended linearly."""
    if m < 1:
        raise ValueError("m must be positive")
    return Poly([(i + m) // m * c for i, c in enumerate(h.coeffs[m:])])


def split_levels(g: Poly, m: int, r: int) -> list:
    """Polynomials ``h_j`` (deg < m) with ``g = sum_j (-1)^j/j! * h_j * (1 - x^m)^j``.

    ``h_j = D_m^j g rem (1 - x^m)``; this is Taylor's formula in ``y = x^m``
    about ``y = 1``.
    """
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    if g.degree >= r * m:
        raise ValueError(f"degree {g.degree} not below r*m = {r * m}")
    out = []
    cur = g
    for _ in range(r):
        folded = [Fraction(0)] * m
        for i, c in enumerate(cur.coeffs):
            folded[i % m] += c
        out.append(Poly(folded))
        cur = dm_derivative(cur, m)
    return out


def decompose(N: int) -> QPFDecomposition:
    """Full q-partial fraction table {(k, l): g_kl} of F_N."""
    if N < 1:
        raise ValueError("N must be positive")
    terms = {}
    for k in range(1, N + 1):
        L = N // k
        gk = inverse_cyclotomic(k) ** L * h_component(N, k)
        for j, hj in enumerate(split_levels(gk, k, L)):
            terms[(k, L - j)] = hj * Fraction((-1) ** j, factorial(j))
    return QPFDecomposition(N, terms)


def gamma_table(N_or_decomposition) -> GammaTable:
    d = N_or_decomposition
    if not isinstance(d, QPFDecomposition):
        d = decompose(d)
    entries = {}
    for (k, l), g in d.terms.items():
        for h in range(k):
            entries[(h, k, l)] = g.coeff(h)
    return GammaTable(d.N, entries)


def decompose_variant_k2(N: int) -> VariantK2Table:
    """Coefficients of 1/(1+x)^l in the variant with (1+x)-powers for k = 2.

    Expands (1+x)^M F_N(x), M = N//2, about x = -1: the coefficient of
    (1+x)^j is Gamma~_{0,2,M-j}.  Computed from the full product directly,
    independently of :func:`decompose`.
    """
    if N < 2:
        raise ValueError("N must be at least 2")
    M = N // 2
    den = Poly.const(1)
    for j in range(1, N + 1):
        den = den * one_minus_x_pow(j)
    den = den.exact_div(Poly([1, 1]) ** M)
    coeffs = taylor_coeffs(Poly.const(1), den, -1, M)
    return VariantK2Table(N, {M - j: c for j, c in enumerate(coeffs)})


def _decimal(v: float) -> str:
    return f"{v:.12g}"


def rademacher_top(h: int, k: int, N: int) -> RademacherTop:
    """Top-order classical coefficient C_{h,k,N//k} at the pole xi = x^h mod Phi_k.

    C = (-xi)^L / (k^L L! prod_{m <= N, k does not divide m} (1 - xi^m)),
    the limit of (x - xi)^L F_N(x) as x -> xi.
    """
    _check_range(N, k)
    if not 0 <= h < k or gcd(h, k) != 1:
        raise ValueError("need 0 <= h < k with gcd(h, k) = 1")
    L = N // k
    xi = CycloFieldElement.root(k, h)
    den = CycloFieldElement(k, k**L * factorial(L))
    for m in range(1, N + 1):
        if m % k:
            den = den * (1 - xi**m)
    value = (-xi) ** L / den
    z = value.to_complex()
    return RademacherTop(h, k, N, value, (_decimal(z.real), _decimal(z.imag)))


def rademacher_link(h: int, k: int, N: int, decomposition: QPFDecomposition | None = None) -> tuple:
    """Both sides of g_{kL}(xi) = C * (-k/xi)^L as field elements."""
    d = decomposition if decomposition is not None else decompose(N)
    L = N // k
    xi = CycloFieldElement.root(k, h)
    lhs = _eval_at(d[(k, L)], xi)
    rhs = rademacher_top(h, k, N).value * (-k * xi.inverse()) ** L
    return lhs, rhs


def _eval_at(p: Poly, xi: CycloFieldElement) -> CycloFieldElement:
    acc = CycloFieldElement(xi.k, 0)
    for c in reversed(p.coeffs):
        acc = acc * xi + c
    return acc
