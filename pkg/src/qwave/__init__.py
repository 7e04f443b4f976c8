"""Exact q-partial fractions of F_N(x) = 1/prod_{k<=N}(1 - x^k).

Decomposition, Gamma coefficient tables, Sylvester waves, Gaussian-Ramanujan
sums and the degenerate Bernoulli/Euler closed forms for the first two waves.
All arithmetic is over the rationals.
"""
from __future__ import annotations

from .cyclofield import CycloFieldElement
from .cyclotomic import cyclotomic, dresden_bezout, inverse_cyclotomic, psi
from .degnum import deg_series, w1_coeffs, w1_recurrence_check, w2_coeffs, w2_recurrence_check
from .evalop import EvalUndefined, RationalPolyExpr, cover_up, eval_mod, eval_mod_power, eval_taylor
from .grsum import gamma_top_fast, ramanujan_sum, sigma_sieved, sigma_table, sigma_table_sieved
from .oracle import p_dp, series_of_FN, verify_reconstruction
from .poly import Poly, poly_divrem, poly_xgcd, taylor_coeffs
from .qpartial import (
    GammaTable,
    QPFDecomposition,
    decompose,
    decompose_variant_k2,
    gamma_table,
    rademacher_link,
    rademacher_top,
)
from .waves import InconsistencyError, partition_via_waves, w1_w2_truncation_report, wave_eval

__version__ = "0.1.0"

__all__ = [
    "CycloFieldElement",
    "EvalUndefined",
    "GammaTable",
    "InconsistencyError",
    "Poly",
    "QPFDecomposition",
    "RationalPolyExpr",
    "cover_up",
    "cyclotomic",
    "decompose",
    "decompose_variant_k2",
    "deg_series",
    "dresden_bezout",
    "eval_mod",
    "eval_mod_power",
    "eval_taylor",
    "gamma_table",
    "gamma_top_fast",
    "inverse_cyclotomic",
    "p_dp",
    "partition_via_waves",
    "poly_divrem",
    "poly_xgcd",
    "psi",
    "rademacher_link",
    "rademacher_top",
    "ramanujan_sum",
    "series_of_FN",
    "sigma_sieved",
    "sigma_table",
    "sigma_table_sieved",
    "taylor_coeffs",
    "verify_reconstruction",
    "w1_coeffs",
    "w1_recurrence_check",
    "w1_w2_truncation_report",
    "w2_coeffs",
    "w2_recurrence_check",
    "wave_eval",
]
