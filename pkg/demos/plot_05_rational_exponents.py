"""
Rational exponents
==================

Allowing rational exponents brings in positive rationals and radicals.  The
distance stays an exact fraction, and embedding into exponent sequences
indexed by prime rank is an l1 isometry.
"""

from arithmetic_metric import (
    embed,
    ext_big_omega,
    ext_dist,
    from_rational,
    l1_norm,
    nth_root,
    parse_extended,
    sequence_difference,
)
from arithmetic_metric.extended import dense

two = from_rational(2)
sqrt2, cbrt2 = nth_root(two, 2), nth_root(two, 3)
print("d(sqrt 2, cbrt 2) =", ext_dist(sqrt2, cbrt2))

x = parse_extended("root(3, 45/8)")
y = from_rational(5, 12)
print(x, "|", y, "| Omega(x) =", ext_big_omega(x))

diff = sequence_difference(embed(x), embed(y))
print([str(c) for c in dense(diff)])
print(ext_dist(x, y), l1_norm(diff))
