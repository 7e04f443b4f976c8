"""Ramanujan sums and Gaussian-Ramanujan sums.

``sigma_k(t; j)`` is the sum over primitive k-th roots xi of
``xi**(-t) * (1 - xi)(1 - xi**2)...(1 - xi**j)``.  It is an integer; the
whole k-by-k table follows from the Ramanujan sums by

    sigma_k(t; j) = sigma_k(t; j-1) - sigma_k(t-j; j-1)

in O(k^2) steps.  :func:`sigma_sieved` gets the same numbers by expanding the
q-product and folding it modulo x^k - 1, for cross-checking.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, gcd

from .cyclotomic import divisors, totient
from .qpartial import GammaTable

__all__ = [
    "mobius",
    "ramanujan_sum",
    "SigmaTable",
    "sigma_table",
    "sigma_sieved",
    "sigma_table_sieved",
    "sigma_bounds_check",
    "gamma_top_fast",
    "gamma_top_table",
]


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


@lru_cache(maxsize=None)
def _ramanujan_row(k: int) -> tuple:
    return tuple(
        sum(d * mobius(k // d) for d in divisors(gcd(t, k))) for t in range(k)
    )


def ramanujan_sum(k: int, t: int) -> int:
    """c_k(t) = sum_{d | gcd(t, k)} d * mu(k/d)."""
    if k < 1:
        raise ValueError("k must be positive")
    return _ramanujan_row(k)[t % k]


@dataclass(frozen=True)
class SigmaTable:
    k: int
    values: tuple  # values[t][j]

    def __getitem__(self, tj) -> int:
        t, j = tj
        return self.values[t % self.k][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.values]

    def rows(self) -> list:
        return [list(r) for r in self.values]


def sigma_table(k: int) -> SigmaTable:
    """All sigma_k(t; j), 0 <= t, j < k, by the recurrence in j."""
    if k < 1:
        raise ValueError("k must be positive")
    cols = [list(_ramanujan_row(k))]
    for j in range(1, k):
        prev = cols[-1]
        cols.append([prev[t] - prev[(t - j) % k] for t in range(k)])
    return SigmaTable(k, tuple(tuple(cols[j][t] for j in range(k)) for t in range(k)))


_cached_sigma_table = lru_cache(maxsize=256)(sigma_table)


def _folded_qproduct(k: int, j: int) -> list:
    # prod_{i<=j} (1 - x^i) reduced modulo x^k - 1, as a length-k list
    a = [0] * k
    a[0] = 1
    for i in range(1, j + 1):
        s = i % k
        a = [a[e] - a[(e - s) % k] for e in range(k)]
    return a


def sigma_sieved(k: int, t: int, j: int) -> int:
    """sigma_k(t; j) from x^(-t mod k) * (x)_j folded mod x^k - 1, then sum a_s c_k(s)."""
    if k < 1:
        raise ValueError("k must be positive")
    if not 0 <= j < k:
        raise ValueError("need 0 <= j < k")
    a = _folded_qproduct(k, j)
    shift = (-t) % k
    c = _ramanujan_row(k)
    return sum(a[e] * c[(e + shift) % k] for e in range(k) if a[e])


def sigma_table_sieved(k: int) -> SigmaTable:
    """The whole table through the sieved route (O(k^3)); for benchmarks and checks."""
    if k < 1:
        raise ValueError("k must be positive")
    c = _ramanujan_row(k)
    a = [0] * k
    a[0] = 1
    cols = []
    for j in range(k):
        if j:
            a = [a[e] - a[(e - j) % k] for e in range(k)]
        nz = [(e, a[e]) for e in range(k) if a[e]]
        cols.append([sum(v * c[(e - t) % k] for e, v in nz) for t in range(k)])
    return SigmaTable(k, tuple(tuple(cols[j][t] for j in range(k)) for t in range(k)))


def sigma_bounds_check(k: int) -> dict:
    """Check the elementary bounds on |sigma_k(t; j)| for j in {0, 1, k-2, k-1}."""
    tab = sigma_table(k)
    phi = totient(k)
    out = {"j=0": all(abs(tab[t, 0]) <= phi for t in range(k))}
    out["j=1"] = k < 2 or all(abs(tab[t, 1]) <= 2 * phi for t in range(k))
    out["j=k-1"] = all(abs(tab[t, k - 1]) <= k * phi for t in range(k))
    out["j=k-2"] = k < 2 or all(
        2 * abs(tab[t, k - 2]) <= k * k * (k - 1) * phi for t in range(k)
    )
    return out


def gamma_top_fast(j: int, k: int, N: int) -> Fraction:
    """Gamma_{j,k,N//k}(N) = sigma_k(-j; k-1-(N mod k)) / (k^(N//k + 2) (N//k)!)."""
    if not 1 <= k <= N:
        raise ValueError("need 1 <= k <= N")
    if not 0 <= j < k:
        raise ValueError("need 0 <= j < k")
    L = N // k
    sigma = _cached_sigma_table(k)[(-j) % k, k - 1 - N % k]
    return Fraction(sigma, k ** (L + 2) * factorial(L))


def gamma_top_table(N: int) -> GammaTable:
    """GammaTable holding only the top level l = N//k of every k."""
    entries = {}
    for k in range(1, N + 1):
        L = N // k
        for j in range(k):
            entries[(j, k, L)] = gamma_top_fast(j, k, N)
    return GammaTable(N, entries)
