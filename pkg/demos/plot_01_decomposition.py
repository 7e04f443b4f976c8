"""
q-partial fractions of 1/((1-x)(1-x^2)...(1-x^N))
==================================================

Every rational function F_N splits into pieces g_kl(x)/(1-x^k)^l with
deg g_kl < k.  This script builds the split for small N, prints it, and
checks it both ways: as an exact polynomial identity and against the power
series of F_N.
"""
from qwave import decompose, gamma_table, series_of_FN, verify_reconstruction

# N = 3 has one piece per (k, l) with l <= 3//k
d = decompose(3)
for (k, l), g in sorted(d.terms.items()):
    print(f"g[{k},{l}] = {g}")

# the numerator over (1 - x^3) is (2 - x - x^2)/9
print(d[(3, 1)])

# clearing denominators gives the constant 1 exactly
print(verify_reconstruction(d))

# Gamma_{h,k,l} is the coefficient of x^h in g_kl; Gamma_{0,1,N} = 1/N!
table = gamma_table(6)
print(table[(0, 1, 6)])

# the first coefficients of F_6 count partitions into parts <= 6
print([int(c) for c in series_of_FN(6, 12)])

# a larger case still reconstructs exactly
print(verify_reconstruction(decompose(10)))
