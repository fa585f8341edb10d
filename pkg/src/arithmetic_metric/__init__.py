"""Arithmetic metric on the natural numbers.

``dist(a, b)`` is the number of prime multiplications and divisions needed to
turn ``a`` into ``b``, equivalently ``Omega(lcm(a, b)) - Omega(gcd(a, b))``.
"""

from .analysis import (
    OmegaCensus,
    census_table,
    closed_ball,
    diameter_bruteforce,
    diameter_formula,
    landau_estimate,
    omega_census,
    xi,
)
from .errors import ArithmeticMetricError, EmptyIndexError, InvalidArgumentError, OutOfRangeError
from .extended import (
    ExtendedNumber,
    embed,
    ext_big_omega,
    ext_dist,
    from_rational,
    l1_norm,
    nth_root,
    parse_extended,
    sequence_difference,
)
from .factor_core import (
    Factorization,
    SpfSieve,
    big_omega,
    build_sieve,
    factor,
    is_prime,
    prime_rank,
    primes_up_to,
    set_default_sieve_limit,
    valuation,
)
from .hasse import HasseGraph, bfs_distances, build_hasse, export_dot, graph_distance
from .index import BkIndex, bk_insert, bk_nearest, bk_range, load_corpus
from .metric import dist, dist_via_lcm_gcd, geodesic_through, is_unit_step, lcm_gcd_exponents

__version__ = "0.1.0"
