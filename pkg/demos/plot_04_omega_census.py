"""
Counting k-almost-primes
========================

Tally Omega over 1..n with the sieve and set the counts beside the classical
asymptotic (n / ln n) (ln ln n)^(k-1) / (k-1)!.  The estimate converges
very slowly, so at desk scale the ratios only hover around 1.
"""

import arithmetic_metric as am

for row in am.census_table(10**6, kmax=8):
    est = "-" if row["estimate"] is None else f"{row['estimate']:12.1f}"
    ratio = "-" if row["ratio"] is None else f"{row['ratio']:.4f}"
    print(f"{row['k']:2d} {row['count']:8d} {est:>12} {ratio:>8}")

# The primes are the ball of radius 1 around 1, minus the center
census = am.omega_census(10**4)
print(census.count(1), len(am.closed_ball(1, 1, 10**4)) - 1)
