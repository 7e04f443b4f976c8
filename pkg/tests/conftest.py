from __future__ import annotations

from fractions import Fraction

from hypothesis import strategies as st

from qwave.poly import Poly

small_fractions = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=9),
)


def polys(max_degree: int = 8, nonzero: bool = False):
    s = st.lists(small_fractions, min_size=1, max_size=max_degree + 1).map(Poly)
    return s.filter(bool) if nonzero else s


def nonconstant_polys(max_degree: int = 6):
    return polys(max_degree).filter(lambda p: p.degree >= 1)
