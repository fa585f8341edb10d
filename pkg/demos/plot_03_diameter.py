"""
Diameter of 1..n
================

The farthest pair in 1..n is the largest power of 2 against the largest power
of 3, so the diameter is xi_2(n) + xi_3(n).  Check it against a full pair scan.
"""

import numpy as np

import arithmetic_metric as am

ns = np.arange(1, 201)
formula = np.array([am.diameter_formula(int(n)) for n in ns])
brute = np.array([am.diameter_bruteforce(int(n))[0] for n in ns])
print("all equal:", bool(np.all(formula == brute)))

for n in (12, 100, 1000):
    value, pair = am.diameter_bruteforce(n)
    print(n, value, pair)

# Jumps happen exactly at powers of 2 and 3
jumps = ns[1:][np.diff(formula) > 0]
print(jumps.tolist())
