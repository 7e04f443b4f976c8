"""
Gaussian-Ramanujan sums and the top-level coefficients
=======================================================

sigma_k(t; j) sums xi^(-t)(1-xi)...(1-xi^j) over primitive k-th roots xi.
A Pascal-type recurrence fills the k-by-k table in O(k^2) integer steps,
and the table gives every top-level coefficient Gamma_{j,k,N//k}(N) without
decomposing anything.
"""
import time

from qwave import gamma_table, gamma_top_fast, ramanujan_sum, sigma_table
from qwave.grsum import sigma_table_sieved

print(sigma_table(6).rows())

# the j = 0 column is the Ramanujan sum, the last column is k times it
k = 12
tab = sigma_table(k)
print(tab.column(0) == [ramanujan_sum(k, t) for t in range(k)])
print(tab.column(k - 1) == [k * ramanujan_sum(k, t) for t in range(k)])

# recurrence against the sieved route
for k in (32, 128):
    t0 = time.perf_counter()
    a = sigma_table(k)
    t1 = time.perf_counter()
    b = sigma_table_sieved(k)
    t2 = time.perf_counter()
    print(k, a == b, f"recurrence {1000 * (t1 - t0):.1f} ms, sieved {1000 * (t2 - t1):.1f} ms")

# top-level Gamma from sigma alone, compared with the full decomposition
N = 11
full = gamma_table(N)
print(all(gamma_top_fast(j, k, N) == full[(j, k, N // k)]
          for k in range(1, N + 1) for j in range(k)))
