"""Cross-validation checks shared by ``qwave verify`` and the test-suite.

Each check returns a :class:`Check` carrying a pass flag and, on failure, the
first witness found.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd

from .degnum import w1_coeffs, w1_recurrence_check, w2_coeffs, w2_recurrence_check
from .grsum import (
    gamma_top_fast,
    ramanujan_sum,
    sigma_bounds_check,
    sigma_sieved,
    sigma_table,
)
from .oracle import p_dp, verify_reconstruction
from .poly import Poly
from .qpartial import decompose, decompose_variant_k2, gamma_table, rademacher_link
from .waves import partition_via_waves

__all__ = ["Check", "case_table_k2_k3", "CHECKS", "run_checks"]


@dataclass(frozen=True)
class Check:
    name: str
    N: int
    ok: bool
    witness: str = ""


def case_table_k2_k3(k: int, N: int) -> Poly:
    """Closed forms of g_{k, N//k} for k = 2 and k = 3, one per residue of N."""
    L = N // k
    if k == 2:
        extra = 1 if N % 2 == 0 else 2
        return Poly([1, -1]) * Fraction(1, 2 ** (L + extra) * factorial(L))
    if k == 3:
        r = N % 3
        shape = Poly([1, 0, -1]) if r == 1 else Poly([2, -1, -1])
        extra = 2 if r == 2 else 1
        return shape * Fraction(1, 3 ** (L + extra) * factorial(L))
    raise ValueError("case tables exist for k = 2, 3 only")


class _Context:
    """Per-N cache so several checks can share one decomposition."""

    def __init__(self, N: int):
        self.N = N
        self._d = None
        self._g = None

    @property
    def decomposition(self):
        if self._d is None:
            self._d = decompose(self.N)
        return self._d

    @property
    def gamma(self):
        if self._g is None:
            self._g = gamma_table(self.decomposition)
        return self._g


def check_reconstruction(ctx: _Context) -> Check:
    r = verify_reconstruction(ctx.decomposition)
    return Check("reconstruction", ctx.N, r.ok, "" if r.ok else f"{r.stage} at x^{r.witness}")


def check_wave_sum(ctx: _Context, n_max: int = 200) -> Check:
    table = p_dp(ctx.N, n_max)
    for n in range(n_max + 1):
        got = partition_via_waves(n, ctx.N, ctx.gamma)
        if got != table[n]:
            return Check("wave-sum", ctx.N, False, f"n={n}: {got} != {table[n]}")
    return Check("wave-sum", ctx.N, True)


def check_gamma_top(ctx: _Context) -> Check:
    N = ctx.N
    for k in range(1, N + 1):
        for j in range(k):
            fast = gamma_top_fast(j, k, N)
            full = ctx.gamma[(j, k, N // k)]
            if fast != full:
                return Check("gamma-top", N, False, f"(j,k)=({j},{k}): {fast} != {full}")
    return Check("gamma-top", N, True)


def check_sigma(ctx: _Context) -> Check:
    """Recurrence = sieved oracle, the k-1 column and the bounds, for k = N."""
    k = ctx.N
    tab = sigma_table(k)
    for t in range(k):
        if tab[t, k - 1] != k * ramanujan_sum(k, t):
            return Check("sigma", k, False, f"sigma_{k}({t};{k - 1}) != k c_k(t)")
        for j in range(k):
            if tab[t, j] != sigma_sieved(k, t, j):
                return Check("sigma", k, False, f"(t,j)=({t},{j})")
    bounds = sigma_bounds_check(k)
    if not all(bounds.values()):
        bad = [name for name, ok in bounds.items() if not ok]
        return Check("sigma", k, False, f"bounds {bad}")
    return Check("sigma", k, True)


def check_closed_forms(ctx: _Context) -> Check:
    N = ctx.N
    col = [ctx.gamma[(0, 1, l)] for l in range(1, N + 1)]
    if w1_coeffs(N) != col:
        return Check("closed-forms", N, False, "W1 coefficients differ from Gamma_{01l}")
    if N >= 2:
        variant = decompose_variant_k2(N)
        if w2_coeffs(N) != [variant[l] for l in range(1, N // 2 + 1)]:
            return Check("closed-forms", N, False, "W2 coefficients differ from variant table")
    return Check("closed-forms", N, True)


def check_recurrences(ctx: _Context) -> Check:
    N = ctx.N
    if not w1_recurrence_check(N):
        return Check("recurrences", N, False, "W1 recurrence")
    if N >= 2 and not w2_recurrence_check(N):
        return Check("recurrences", N, False, "W2 recurrence")
    return Check("recurrences", N, True)


def check_case_tables(ctx: _Context) -> Check:
    N = ctx.N
    for k in (2, 3):
        if k <= N and ctx.decomposition[(k, N // k)] != case_table_k2_k3(k, N):
            return Check("case-tables", N, False, f"k={k}")
    return Check("case-tables", N, True)


def check_rademacher(ctx: _Context) -> Check:
    N = ctx.N
    for k in range(1, N + 1):
        for h in range(k):
            if gcd(h, k) != 1:
                continue
            lhs, rhs = rademacher_link(h, k, N, ctx.decomposition)
            if lhs != rhs:
                return Check("rademacher", N, False, f"(h,k)=({h},{k})")
    return Check("rademacher", N, True)


CHECKS = {
    "reconstruction": check_reconstruction,
    "wave-sum": check_wave_sum,
    "gamma-top": check_gamma_top,
    "sigma": check_sigma,
    "closed-forms": check_closed_forms,
    "recurrences": check_recurrences,
    "case-tables": check_case_tables,
    "rademacher": check_rademacher,
}


def run_checks(N_max: int, names=None) -> list:
    """Run the named checks (all by default) for N = 1..N_max."""
    names = list(CHECKS) if names is None else list(names)
    out = []
    for N in range(1, N_max + 1):
        ctx = _Context(N)
        for name in names:
            out.append(CHECKS[name](ctx))
    return out
