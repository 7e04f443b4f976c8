"""
Top-order classical coefficients in Q(zeta_k)
=============================================

Near a primitive k-th root xi, F_N behaves like C/(x - xi)^L with L = N//k.
C lives in the cyclotomic field, handled exactly as Q[x]/Phi_k.  The top
q-partial numerator evaluated at xi recovers C.
"""
from qwave import CycloFieldElement, decompose, rademacher_link, rademacher_top

top = rademacher_top(1, 3, 9)
print(top.value, "  ~", top.approx)

# g_{3,3}(xi) and C (-3/xi)^3 are the same field element
d = decompose(9)
lhs, rhs = rademacher_link(1, 3, 9, d)
print(lhs, "|", rhs, "|", lhs == rhs)

# traces sum over all conjugates; the trace of x^t is the Ramanujan sum c_k(t)
x = CycloFieldElement.gen(12)
print([str((x**t).trace()) for t in range(12)])
