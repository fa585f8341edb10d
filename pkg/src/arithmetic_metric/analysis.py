"""
Balls, the diameter of I_n, and counts of k-almost-primes.

``diameter_formula`` gives the closed form ``xi(2, n) + xi(3, n)``;
``diameter_bruteforce`` scans every pair of I_n and is the check on it.
``omega_census`` counts how many ``m <= n`` have exactly ``k`` prime factors
and ``landau_estimate`` is the classical asymptotic for those counts.  The
estimate is the only floating-point quantity in the package and converges
very slowly (ratios at n = 1e6 are still several percent off 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidArgumentError, OutOfRangeError
from .factor_core import as_natural, default_sieve, factor, primes_up_to, SpfSieve
from .metric import factor_distance

DEFAULT_BALL_CAP = 10**6
BRUTEFORCE_DIAMETER_CAP = 2000


def _positive_int(v, name: str, minimum: int = 1) -> int:
    if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or v < minimum:
        raise InvalidArgumentError(f"{name} must be an integer >= {minimum}, got {v!r}")
    return int(v)


def xi(p: int, s: int) -> int:
    """Largest ``k >= 0`` with ``p**k <= s``, by exact integer powering.

    >>> xi(2, 12), xi(3, 12), xi(2, 1)
    (3, 2, 0)
    """
    p = _positive_int(p, "p", 2)
    s = _positive_int(s, "s", 1)
    k, power = 0, p
    while power <= s:
        k += 1
        power *= p
    return k


def closed_ball(x: int, r: int, n: int, cap: int = DEFAULT_BALL_CAP) -> list[int]:
    """All ``y`` in ``I_n`` with ``dist(x, y) <= r``, ascending (brute-force scan)."""
    x = as_natural(x, "x")
    r = _positive_int(r, "r", 0)
    n = _positive_int(n, "n", 1)
    if n > cap:
        raise OutOfRangeError(f"n = {n} exceeds ball cap {cap}")
    fx = factor(x)
    return [y for y in range(1, n + 1) if factor_distance(fx, factor(y)) <= r]


def diameter_formula(n: int) -> int:
    """Diameter of ``I_n``: ``xi(2, n) + xi(3, n)``."""
    n = _positive_int(n, "n", 1)
    return xi(2, n) + xi(3, n)


def exponent_matrix(n: int) -> np.ndarray:
    """Row ``m - 1`` holds the valuations of ``m`` at each prime ``<= n``."""
    n = _positive_int(n, "n", 1)
    if n == 1:
        return np.zeros((1, 0), dtype=np.int64)
    primes = primes_up_to(n)
    E = np.zeros((n, len(primes)), dtype=np.int64)
    for j, p in enumerate(primes):
        pk = p
        while pk <= n:
            E[pk - 1 :: pk, j] += 1
            pk *= p
    return E


def diameter_bruteforce(n: int, cap: int = BRUTEFORCE_DIAMETER_CAP) -> tuple[int, tuple[int, int]]:
    """Maximum distance over all pairs of ``I_n`` with the lexicographically
    smallest pair ``(x, y)``, ``x <= y``, attaining it."""
    n = _positive_int(n, "n", 1)
    if n > cap:
        raise OutOfRangeError(f"n = {n} exceeds brute-force cap {cap}")
    E = exponent_matrix(n)
    best, pair = 0, (1, 1)
    for i in range(n - 1):
        d = np.abs(E[i + 1 :] - E[i]).sum(axis=1)
        j = int(d.argmax())
        if d[j] > best:
            best, pair = int(d[j]), (i + 1, i + 2 + j)
    return best, pair


@dataclass(frozen=True)
class OmegaCensus:
    """``counts[k]`` is the number of ``m <= n`` with exactly ``k`` prime factors."""

    n: int
    counts: tuple[int, ...]

    def count(self, k: int) -> int:
        return self.counts[k] if 0 <= k < len(self.counts) else 0


def omega_values(n: int, sieve: SpfSieve | None = None) -> np.ndarray:
    """Array ``w`` with ``w[m] = Omega(m)`` for ``1 <= m <= n`` (``w[0] = 0``)."""
    sieve = sieve or default_sieve()
    if n > sieve.limit:
        raise OutOfRangeError(f"n = {n} exceeds sieve limit {sieve.limit}")
    spf = sieve.spf[: n + 1].astype(np.int64)
    w = np.zeros(n + 1, dtype=np.int64)
    # m // spf[m] <= m // 2, so each doubling block depends only on earlier blocks.
    lo = 2
    while lo <= n:
        hi = min(2 * lo, n + 1)
        m = np.arange(lo, hi)
        w[lo:hi] = w[m // spf[lo:hi]] + 1
        lo = hi
    return w


def omega_census(n: int, sieve: SpfSieve | None = None) -> OmegaCensus:
    """Exact census of ``Omega`` over ``I_n``."""
    n = _positive_int(n, "n", 1)
    w = omega_values(n, sieve)
    return OmegaCensus(n, tuple(int(c) for c in np.bincount(w[1:])))


def landau_estimate(n: int, k: int) -> float:
    """Approximate count ``(n / ln n) (ln ln n)**(k-1) / (k-1)!`` of k-almost-primes."""
    n = _positive_int(n, "n", 1)
    k = _positive_int(k, "k", 1)
    if n < 3:
        raise InvalidArgumentError(f"landau_estimate needs n >= 3 (ln ln n > 0), got {n}")
    ln = math.log(n)
    return n / ln * math.log(ln) ** (k - 1) / math.factorial(k - 1)


def census_table(n: int, kmax: int | None = None) -> list[dict]:
    """Rows ``{k, count, estimate, ratio}`` for ``k = 0..kmax``.

    ``estimate`` and ``ratio`` are approximate and ``None`` where undefined
    (``k = 0`` or ``n < 3``).
    """
    census = omega_census(n)
    if kmax is None:
        kmax = len(census.counts) - 1
    kmax = _positive_int(kmax, "kmax", 0)
    rows = []
    for k in range(kmax + 1):
        count = census.count(k)
        estimate = landau_estimate(n, k) if k >= 1 and n >= 3 else None
        ratio = count / estimate if estimate else None
        rows.append({"k": k, "count": count, "estimate": estimate, "ratio": ratio})
    return rows
