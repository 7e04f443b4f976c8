"""Sylvester waves W_k(n; N) and the restricted partition function as their sum.

The term Gamma x^h / (1 - x^k)^l contributes C(q + l - 1, l - 1) * Gamma to
the coefficient of x^(h + kq), so

    W_k(n; N) = sum_l C(n//k + l - 1, l - 1) * Gamma_{n mod k, k, l}(N)

and p_N(n) = sum_k W_k(n; N).  Values stay in the binomial basis and are
exact throughout.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .grsum import gamma_top_fast
from .qpartial import GammaTable, VariantK2Table, gamma_table, decompose_variant_k2

__all__ = [
    "WaveValue",
    "wave_eval",
    "wave_value",
    "partition_via_waves",
    "wave_top_term",
    "w2_closed_eval",
    "w1_w2_truncation_report",
    "TruncationReport",
    "h1_closed_form",
    "h2_closed_form",
    "w2_leading_coefficient",
    "InconsistencyError",
]


class InconsistencyError(ArithmeticError):
    """An exact identity failed; indicates a bug, never a rounding issue."""


@dataclass(frozen=True)
class WaveValue:
    k: int
    n: int
    N: int
    value: Fraction


def wave_eval(k: int, n: int, N: int, table: GammaTable) -> Fraction:
    if table.N != N:
        raise ValueError(f"table is for N={table.N}, not {N}")
    if not 1 <= k <= N:
        raise ValueError(f"k={k} out of range 1..{N}")
    if n < 0:
        raise ValueError("n must be nonnegative")
    q, h = divmod(n, k)
    total = Fraction(0)
    for l in range(1, N // k + 1):
        g = table[(h, k, l)]
        if g:
            total += comb(q + l - 1, l - 1) * g
    return total


def wave_value(k: int, n: int, N: int, table: GammaTable | None = None) -> WaveValue:
    table = table if table is not None else gamma_table(N)
    return WaveValue(k, n, N, wave_eval(k, n, N, table))


def partition_via_waves(n: int, N: int, table: GammaTable | None = None) -> int:
    """p_N(n) as the sum of all N waves; aborts if the sum is not an integer."""
    if n < 0 or N < 1:
        raise ValueError("need n >= 0 and N >= 1")
    table = table if table is not None else gamma_table(N)
    total = sum((wave_eval(k, n, N, table) for k in range(1, N + 1)), Fraction(0))
    if total.denominator != 1:
        raise InconsistencyError(f"wave sum for n={n}, N={N} is not an integer: {total}")
    return int(total)


def wave_top_term(k: int, N: int) -> tuple:
    """Leading coefficients (indexed by n mod k) and the degree in n//k of W_k."""
    if not 1 <= k <= N:
        raise ValueError(f"k={k} out of range 1..{N}")
    L = N // k
    return [gamma_top_fast(j, k, N) for j in range(k)], L - 1


def w2_closed_eval(n: int, N: int, table: VariantK2Table | None = None) -> Fraction:
    """W_2(n; N) = (-1)^n sum_l C(n + l - 1, l - 1) Gamma~_{0,2,l}(N)."""
    if N < 2:
        raise ValueError("N must be at least 2")
    table = table if table is not None else decompose_variant_k2(N)
    total = sum((comb(n + l - 1, l - 1) * g for l, g in table.entries.items()), Fraction(0))
    return -total if n % 2 else total


# -- truncated first and second waves ---------------------------------------


def h1_closed_form(N: int) -> Fraction:
    M = N // 2
    if N % 2 == 0:
        return Fraction(3 * M * M, 4)
    return Fraction(3 * M * M + 2 * M + 2, 4)


def h2_closed_form(N: int) -> Fraction:
    M = N // 2
    base = Fraction(M**3, 18) + Fraction(5 * M * M, 12)
    if N % 2 == 0:
        return base + Fraction(M, 36)
    return base + Fraction(19 * M, 36) + Fraction(1, 4)


@dataclass(frozen=True)
class TruncationRow:
    name: str
    computed: Fraction
    claimed: Fraction

    @property
    def match(self) -> bool:
        return self.computed == self.claimed


@dataclass(frozen=True)
class TruncationReport:
    N: int
    rows: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def row(self, name: str) -> TruncationRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)


def _second_wave_floor_basis(N: int, parity: int, table: GammaTable, terms: int) -> list:
    """Coefficients of W_2(2s + parity) in the basis C(s + M - 1 - i, M - 1 - i)."""
    M = N // 2
    return [table[(parity, 2, M - i)] if M - i >= 1 else Fraction(0) for i in range(terms)]


def w2_leading_coefficient(N: int, table: GammaTable | None = None) -> Fraction:
    """Coefficient of n^(M-1) in W_2(n; N) for even n, by finite differences."""
    if N < 2:
        raise ValueError("N must be at least 2")
    table = table if table is not None else gamma_table(N)
    d = N // 2 - 1
    vals = [wave_eval(2, 2 * i, N, table) for i in range(d + 1)]
    for _ in range(d):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    # step 2 in n: the d-th difference is d! * 2^d * leading coefficient
    return vals[0] / (factorial(d) * 2**d)


def w1_w2_truncation_report(N: int, table: GammaTable | None = None,
                            variant: VariantK2Table | None = None) -> TruncationReport:
    """Compare leading binomial-basis coefficients of W_1 and W_2 with the closed forms.

    W_1(t) = sum_i a_i C(t + N - 1 - i, N - 1 - i) with a_i = Gamma_{0,1,N-i}.

    W_2 is given two ways, both normalised by (-1)^t / (2^N M!), M = N//2:
    in s = t//2 for each parity of t ("W2floor", basis C(s + M - 1 - i, M - 1 - i))
    and in t itself ("W2t", basis C(t + M - 1 - i, M - 1 - i)).  The i = 1, 2
    coefficients are compared with h_1(N), h_2(N).
    """
    if N < 6:
        raise ValueError("N must be at least 6")
    table = table if table is not None else gamma_table(N)
    variant = variant if variant is not None else decompose_variant_k2(N)
    M = N // 2
    rows = []
    a = [table[(0, 1, N - i)] for i in range(3)]
    rows.append(TruncationRow("W1[0]", a[0], Fraction(1, factorial(N))))
    rows.append(TruncationRow("W1[1]", a[1], Fraction(1, 2 * factorial(N - 2))))
    rows.append(
        TruncationRow("W1[2]", a[2], -Fraction(9 * N * N - 11 * N - 5, 144 * factorial(N - 2)))
    )
    claimed = [Fraction(1), h1_closed_form(N), h2_closed_form(N)]
    norm = Fraction(1, 2**N * factorial(M))
    for parity in (0, 1):
        sign = -1 if parity else 1
        c = [sign * v / norm for v in _second_wave_floor_basis(N, parity, table, 3)]
        for i in range(3):
            rows.append(TruncationRow(f"W2floor[{i}] t%2={parity}", c[i], claimed[i]))
    for i in range(3):
        v = variant.entries.get(M - i, Fraction(0))
        rows.append(TruncationRow(f"W2t[{i}]", v / norm, claimed[i]))
    lead = w2_leading_coefficient(N, table)
    notes = {
        "W2 leading coefficient of n^(M-1)": lead,
        "Gamma~_{02M}/(M-1)!": variant[M] / factorial(M - 1),
        "displayed top-order constant 1/(2^(M+1) M!) at n^M": Fraction(1, 2 ** (M + 1) * factorial(M)),
    }
    return TruncationReport(N, rows, notes)
