"""Matrix elements of Lorentz-group representations, three ways.

The central object is Z^l_mn(theta, tau): the matrix element of a unitary
representation of weight l, evaluated on a complexified rotation angle
theta_c = theta - i tau.  Restricted to tau = 0 it is an ordinary rotation
matrix element (times a fixed phase); the tau direction carries the boost
content.  This script evaluates it by the exact-coefficient double sum and by
the terminating hypergeometric-series route, then exhibits the factorization
into a compact (theta) factor and a noncompact (tau) factor.
"""

import math

from poincarewaves import (
    HarmonicIndex,
    generalized_m_values,
    qu2_factor_jacobi,
    su2_factor_p,
    z_2f1,
    z_sum,
    zonal_z,
)

THETA, TAU = 0.9, 0.4

print("Two independent routes to the same value")
print("----------------------------------------")
for l, m, n in [(1, 1, 0), (2, -1, 1), (1.5, 0.5, -0.5), (3, 2, 2)]:
    idx = HarmonicIndex(l, m, n)
    direct = z_sum(idx, THETA, TAU)
    series = z_2f1(idx, THETA, TAU)
    print(f"Z[{l:>3}, {m:>4}, {n:>4}]({THETA}, {TAU}) = {direct:.12f}"
          f"   |sum - series| = {abs(direct - series):.2e}")

print()
print("Factorization through the intermediate projection k")
print("----------------------------------------------------")
l, m, n = 2, 1, -1
idx = HarmonicIndex(l, m, n)
total = sum(su2_factor_p(l, m, k, THETA) * qu2_factor_jacobi(l, k, n, TAU)
            for k in range(-l, l + 1))
print(f"sum_k P(theta) * Q(tau) = {total:.12f}")
print(f"direct evaluation       = {z_sum(idx, THETA, TAU):.12f}")

print()
print("Boundary behavior")
print("-----------------")
print(f"Z[1, 0, 0](0, 0)       = {z_sum(HarmonicIndex(1, 0, 0), 0.0, 0.0)}"
      "   (Kronecker start)")
print(f"Z[1, 1, 0](0, 0)       = {z_sum(HarmonicIndex(1, 1, 0), 0.0, 0.0)}")
print(f"zonal value l=1        = {zonal_z(1, THETA, TAU):.12f}"
      "   (equals cos(theta - i tau))")
print(f"cos(theta - i tau)     = {complex(math.cos(THETA) * math.cosh(TAU), math.sin(THETA) * math.sinh(TAU)):.12f}")

print()
print("The six-parameter matrix element and its conjugate partner")
print("-----------------------------------------------------------")
args = (0.3, 0.2, THETA, TAU, 0.5, 0.1)
value = generalized_m_values(1, 1, 0, *args)
dotted = generalized_m_values(1, 1, 0, *args, dotted=True)
print(f"M[1, 1, 0]  = {value:.12f}")
print(f"dotted      = {dotted:.12f}")
print(f"conj(M)     = {value.conjugate():.12f}   (dotted == conjugate)")
