"""
Closed forms for the first two waves
====================================

Gamma_{0,1,l}(N) is a product of the Taylor series of i(1-x)/(1-x^i) about
x = 1; the second wave, rewritten over powers of (1+x), is a product of
series about x = -1.  Both are checked against the decomposition here, and
the truncated expansions are compared with the closed forms h_1, h_2.
"""
from qwave import decompose_variant_k2, deg_series, gamma_table, w1_coeffs, w2_coeffs
from qwave.waves import w1_w2_truncation_report

# raw coefficients of 5(1-x)/(1-x^5) in powers of (1-x)
print([str(c) for c in deg_series("bernoulli", 1, 5, 4).coeffs])

N = 9
table = gamma_table(N)
print(w1_coeffs(N) == [table[(0, 1, l)] for l in range(1, N + 1)])
v = decompose_variant_k2(N)
print(w2_coeffs(N) == [v[l] for l in range(1, N // 2 + 1)])

# leading terms match, the next ones do not (see README)
report = w1_w2_truncation_report(8)
for row in report.rows:
    print(f"{row.name:<18} computed {str(row.computed):>12}   displayed {str(row.claimed):>12}")
for key, value in report.notes.items():
    print(key, value)
