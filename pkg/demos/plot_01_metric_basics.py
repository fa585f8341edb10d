"""
Distances between naturals
==========================

Every natural is a vector of prime exponents.  The distance between two of
them is the number of single prime multiplications or divisions needed to
walk from one to the other.
"""

import arithmetic_metric as am

# 12 = 2^2 * 3 and 11 is prime, so the walk goes 11 -> 1 -> 2 -> 4 -> 12
print(am.factor(12), "|", am.factor(11))
print("d(11, 12) =", am.dist(11, 12))

# The same value from the lcm and gcd exponents
lcm, gcd = am.lcm_gcd_exponents(11, 12)
print("Omega(lcm) - Omega(gcd) =", lcm.big_omega - gcd.big_omega)

# Explicit shortest paths through the gcd and through the lcm
print(am.geodesic_through(11, 12, via="gcd"))
print(am.geodesic_through(4, 6, via="lcm"))

# Multiplying both sides by the same number changes nothing
print(am.dist(8, 9), am.dist(8 * 35, 9 * 35))

# Inputs above the sieve are split by Pollard-Brent rho
big = 4294967291 * 4294967279
print(am.factor(big), am.dist(big, 2**63))
