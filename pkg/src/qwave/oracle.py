"""Ground truth that shares no code path with the decomposition.

Restricted partition counts by the coin-change recurrence, the power series of
F_N by plain series inversion, and a reconstruction check that clears
denominators and compares polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import Poly, series_inv

__all__ = ["PartitionTable", "p_dp", "series_of_FN", "verify_reconstruction", "ReconstructionReport"]


@dataclass(frozen=True)
class PartitionTable:
    N: int
    counts: tuple

    def __getitem__(self, n: int) -> int:
        return self.counts[n]


def p_dp(N: int, n_max: int) -> PartitionTable:
    """p_N(n) for n = 0..n_max, adding parts 1..N one at a time."""
    if N < 1:
        raise ValueError("N must be positive")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    counts = [1] + [0] * n_max
    for part in range(1, N + 1):
        for n in range(part, n_max + 1):
            counts[n] += counts[n - part]
    return PartitionTable(N, tuple(counts))


def series_of_FN(N: int, T: int) -> list:
    """First T power-series coefficients of 1/prod_{k<=N}(1 - x^k)."""
    if T < 1:
        raise ValueError("T must be positive")
    den = [Fraction(0)] * T
    den[0] = Fraction(1)
    for k in range(1, N + 1):
        # multiply by (1 - x^k), truncated
        for i in range(T - 1, k - 1, -1):
            den[i] -= den[i - k]
    return series_inv(den, T)


@dataclass(frozen=True)
class ReconstructionReport:
    ok: bool
    stage: str = ""
    witness: int | None = None  # first failing exponent

    def __bool__(self) -> bool:
        return self.ok


def _term_series(g: Poly, k: int, l: int, T: int) -> list:
    # g(x) * sum_q C(q+l-1, l-1) x^(kq), truncated to T terms
    from math import comb

    out = [Fraction(0)] * T
    for h, c in enumerate(g.coeffs):
        if not c:
            continue
        q = 0
        while h + k * q < T:
            out[h + k * q] += c * comb(q + l - 1, l - 1)
            q += 1
    return out


def verify_reconstruction(d, T: int = 200) -> ReconstructionReport:
    """Check sum_{k,l} g_kl/(1 - x^k)^l == F_N.

    A cheap series comparison runs first and reports the first mismatching
    exponent; then the identity is checked exactly after multiplying through
    by prod_j (1 - x^j).
    """
    N = d.N
    target = series_of_FN(N, T)
    acc = [Fraction(0)] * T
    for (k, l), g in d.terms.items():
        for i, c in enumerate(_term_series(g, k, l, T)):
            acc[i] += c
    for i in range(T):
        if acc[i] != target[i]:
            return ReconstructionReport(False, "series", i)

    full = Poly.const(1)
    for j in range(1, N + 1):
        full = full * Poly([1] + [0] * (j - 1) + [-1])
    total = Poly()
    for (k, l), g in d.terms.items():
        cofactor = full
        binom = Poly([1] + [0] * (k - 1) + [-1])
        for _ in range(l):
            cofactor = cofactor.exact_div(binom)
        total = total + g * cofactor
    if total != 1:
        diff = total - 1
        first = next(i for i, c in enumerate(diff.coeffs) if c)
        return ReconstructionReport(False, "identity", first)
    return ReconstructionReport(True)
