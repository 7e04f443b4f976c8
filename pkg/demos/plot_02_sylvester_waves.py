"""
Sylvester waves
===============

Grouping the pieces by k gives the k-th wave W_k(n; N).  Each wave is a
quasi-polynomial in n; their sum is the integer p_N(n).
"""
from qwave import gamma_table, p_dp, partition_via_waves, wave_eval
from qwave.waves import w2_closed_eval, wave_top_term

N = 5
table = gamma_table(N)

# contribution of each wave to p_5(20)
n = 20
parts = [wave_eval(k, n, N, table) for k in range(1, N + 1)]
for k, w in enumerate(parts, start=1):
    print(f"W_{k}({n}; {N}) = {w}")
print("sum:", sum(parts))

# the dynamic-programming count agrees
print(p_dp(N, n)[n], partition_via_waves(n, N, table))

# W_1 dominates: its leading term is n^(N-1)/(N!(N-1)!)
coeffs, degree = wave_top_term(1, N)
print([str(c) for c in coeffs], degree)

# the second wave alternates in sign with n
print([str(w2_closed_eval(n, N)) for n in range(6)])

# large n is cheap once the table exists
print(partition_via_waves(10**6, 12))
