"""
Prime generation, factorization, p-adic valuation and Big Omega.

Everything else in the package consumes integers through ``factor``: the
metric, the Hasse graph, the census and the BK-tree never look at an integer
except through its canonical ``Factorization``.

Inputs are restricted to the unsigned 64-bit range.  Python integers do not
overflow, so the restriction is enforced explicitly: anything that would leave
the range raises ``OutOfRangeError`` instead of producing a silently wrong
metric value.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
import threading
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Mapping

import numpy as np

from .errors import InvalidArgumentError, OutOfRangeError

U64_MAX = 2**64 - 1

DEFAULT_SIEVE_LIMIT = 10**7
SIEVE_LIMIT_ENV = "ARITHMETIC_METRIC_SIEVE_LIMIT"

# Primes below this bound are stripped by trial division before the
# Miller-Rabin / Pollard-Brent stage handles the cofactor.
TRIAL_DIVISION_BOUND = 1000

# (bound, witnesses): Miller-Rabin with these bases is exact for n < bound.
# The last set is exact below 3.3e24, covering all 64-bit inputs.
_MR_TIERS = (
    (2_152_302_898_747, (2, 3, 5, 7, 11)),
    (3_474_749_660_383, (2, 3, 5, 7, 11, 13)),
    (341_550_071_728_321, (2, 3, 5, 7, 11, 13, 17)),
    (3_825_123_056_546_413_051, (2, 3, 5, 7, 11, 13, 17, 19, 23)),
    (318_665_857_834_031_151_167_461, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)
_RHO_MAX_ATTEMPTS = 64


def as_natural(n, name: str = "n") -> int:
    """Validate ``n`` as an integer in [1, 2**64 - 1] and return it as ``int``."""
    if type(n) is int and 0 < n <= U64_MAX:
        return n
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidArgumentError(f"{name} must be an integer, got {n!r}")
    n = int(n)
    if n < 1:
        raise InvalidArgumentError(f"{name} must be >= 1, got {n}")
    if n > U64_MAX:
        raise OutOfRangeError(f"{name} = {n} does not fit in 64 bits")
    return n


def checked_product(*factors: int) -> int:
    """Multiply naturals, raising ``OutOfRangeError`` if the result leaves 64 bits."""
    out = 1
    for f in factors:
        out *= as_natural(f, "factor")
        if out > U64_MAX:
            raise OutOfRangeError("product does not fit in 64 bits")
    return out


# ---------------------------------------------------------------------------
# Factorization value type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """Canonical prime factorization ``n = prod p**e``.

    ``entries`` holds ``(prime, exponent)`` pairs sorted by prime with every
    exponent >= 1.  The empty tuple is the factorization of 1.  Indexing by a
    prime returns its valuation, which is 0 for primes outside the support.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.entries:
            if p <= prev:
                raise InvalidArgumentError("primes must be strictly increasing")
            if e < 1:
                raise InvalidArgumentError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise InvalidArgumentError(f"{p} is not prime")
            prev = p

    @classmethod
    def _trusted(cls, entries: tuple[tuple[int, int], ...]) -> "Factorization":
        # Skips validation; only for entries produced by the factorizer itself.
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", entries)
        return obj

    @classmethod
    def from_mapping(cls, exponents: Mapping[int, int]) -> "Factorization":
        """Build from ``{prime: exponent}``; zero exponents are dropped."""
        items = sorted((int(p), int(e)) for p, e in exponents.items() if e != 0)
        return cls(tuple(items))

    def __getitem__(self, p: int) -> int:
        for q, e in self.entries:
            if q == p:
                return e
            if q > p:
                break
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    @property
    def big_omega(self) -> int:
        return sum(e for _, e in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def value(self) -> int:
        """Multiply the factorization out; fails if the product leaves 64 bits."""
        out = 1
        for p, e in self.entries:
            out *= p**e
            if out > U64_MAX:
                raise OutOfRangeError("factorization value does not fit in 64 bits")
        return out

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.entries)


# ---------------------------------------------------------------------------
# Smallest-prime-factor sieve
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SpfSieve:
    """Smallest-prime-factor table for ``0 <= m <= limit``.

    ``spf[m]`` is the smallest prime dividing ``m`` for ``m >= 2``; primes map
    to themselves.  Entries 0 and 1 hold 0 and 1 and carry no meaning.
    """

    limit: int
    spf: np.ndarray

    def __contains__(self, m: int) -> bool:
        return 2 <= m <= self.limit

    @cached_property
    def primes(self) -> np.ndarray:
        idx = np.arange(self.limit + 1, dtype=self.spf.dtype)
        mask = self.spf == idx
        mask[:2] = False
        return np.flatnonzero(mask)

    @cached_property
    def trial_primes(self) -> list[int]:
        # Python ints: iterating a numpy array in the trial-division loop is slow.
        bound = min(TRIAL_DIVISION_BOUND, self.limit)
        primes = self.primes
        return primes[: int(np.searchsorted(primes, bound, side="right"))].tolist()

    @cached_property
    def trial_primes_array(self) -> np.ndarray:
        return np.array(self.trial_primes, dtype=np.uint64)

    @cached_property
    def trial_product(self) -> int:
        return math.prod(self.trial_primes)

    def is_prime(self, m: int) -> bool:
        if not 2 <= m <= self.limit:
            raise OutOfRangeError(f"{m} outside sieve range [2, {self.limit}]")
        return int(self.spf[m]) == m

    def factor(self, n: int) -> Factorization:
        if n > self.limit:
            raise OutOfRangeError(f"{n} exceeds sieve limit {self.limit}")
        return Factorization._trusted(tuple(_spf_entries(n, self.spf)))


def build_sieve(limit: int) -> SpfSieve:
    """Build the smallest-prime-factor table up to ``limit`` (inclusive)."""
    if isinstance(limit, bool) or not isinstance(limit, (int, np.integer)):
        raise InvalidArgumentError(f"limit must be an integer, got {limit!r}")
    limit = int(limit)
    if limit < 2:
        raise InvalidArgumentError(f"sieve limit must be >= 2, got {limit}")
    dtype = np.int32 if limit < 2**31 else np.int64
    spf = np.zeros(limit + 1, dtype=dtype)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            seg = spf[p * p :: p]
            seg[seg == 0] = p
    unmarked = np.flatnonzero(spf == 0)
    spf[unmarked] = unmarked
    spf.setflags(write=False)
    return SpfSieve(limit, spf)


def _spf_entries(n: int, spf: np.ndarray) -> list[tuple[int, int]]:
    out = []
    lookup = spf.item
    while n > 1:
        p = lookup(n)
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        out.append((p, e))
    return out


_default_lock = threading.Lock()
_default_sieve: SpfSieve | None = None
_default_limit: int | None = None


def default_sieve_limit() -> int:
    if _default_limit is not None:
        return _default_limit
    env = os.environ.get(SIEVE_LIMIT_ENV)
    return int(env) if env else DEFAULT_SIEVE_LIMIT


def set_default_sieve_limit(limit: int | None) -> None:
    """Change the limit of the shared sieve; ``None`` restores env/default.

    The sieve is rebuilt lazily on next use and the factorization cache is
    cleared.
    """
    global _default_sieve, _default_limit
    if limit is not None and int(limit) < 2:
        raise InvalidArgumentError(f"sieve limit must be >= 2, got {limit}")
    with _default_lock:
        _default_limit = None if limit is None else int(limit)
        _default_sieve = None
    _factor_default.cache_clear()
    _prime_rank_default.cache_clear()


def default_sieve() -> SpfSieve:
    """The process-wide sieve, built on first use."""
    global _default_sieve
    sieve = _default_sieve
    if sieve is None:
        with _default_lock:
            if _default_sieve is None:
                _default_sieve = build_sieve(default_sieve_limit())
            sieve = _default_sieve
    return sieve


# ---------------------------------------------------------------------------
# Primality and factorization beyond the sieve
# ---------------------------------------------------------------------------

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit integer."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    witnesses = next((w for bound, w in _MR_TIERS if n < bound), _MR_TIERS[-1][1])
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _brent(n: int, c: int, y: int) -> int:
    """One Pollard-Brent run; returns a divisor of n, possibly n itself."""
    batch = 64
    g = r = q = 1
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            steps = batch if r - k > batch else r - k
            for _ in range(steps):
                y = (y * y + c) % n
                q = q * (x - y) % n
            g = math.gcd(q, n)
            k += batch
        r *= 2
    if g == n:
        # Batched product overshot; backtrack one step at a time.
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(x - ys, n)
            if g > 1:
                break
    return g


_kernel = None


def _load_kernel():
    """The compiled factorization module, or ``None`` if numba is unavailable."""
    global _kernel
    if _kernel is None:
        try:
            from . import _rho_kernel
        except ImportError:
            _rho_kernel = False
        _kernel = _rho_kernel
    return _kernel or None


def _find_divisor(n: int) -> int:
    if n % 2 == 0:
        return 2
    r = math.isqrt(n)
    if r * r == n:
        return r
    for attempt in range(1, _RHO_MAX_ATTEMPTS + 1):
        g = _brent(n, c=attempt, y=attempt + 1)
        if 1 < g < n:
            return g
    raise RuntimeError(f"Pollard-Brent failed to split {n} after {_RHO_MAX_ATTEMPTS} attempts")


def _factor_large(n: int, sieve: SpfSieve) -> Factorization:
    kernel = _load_kernel()
    if kernel is not None:
        factors, count = kernel.factor_u64(np.uint64(n), sieve.spf, sieve.trial_primes_array)
        if count >= 0:
            grouped = itertools.groupby(factors.tolist())
            return Factorization._trusted(tuple((p, len(list(g))) for p, g in grouped))
    return _factor_large_py(n, sieve)


def _factor_large_py(n: int, sieve: SpfSieve) -> Factorization:
    """Pure-Python route beyond the sieve; also the reference for the compiled kernel."""
    counts: dict[int, int] = {}
    m = n
    bound = min(TRIAL_DIVISION_BOUND, sieve.limit)
    # g is the product of the distinct trial primes dividing n.
    g = math.gcd(m, sieve.trial_product)
    if g > 1:
        small = [p for p, _ in _spf_entries(g, sieve.spf)] if g <= sieve.limit else [
            p for p in sieve.trial_primes if g % p == 0
        ]
        for p in small:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            counts[p] = e
    stack = [m] if m > 1 else []
    while stack:
        m = stack.pop()
        if m <= sieve.limit:
            for p, e in _spf_entries(m, sieve.spf):
                counts[p] = counts.get(p, 0) + e
        elif m < (bound + 1) ** 2 or is_prime(m):
            # No prime <= bound divides m, so a composite m is >= (bound + 1)**2.
            counts[m] = counts.get(m, 0) + 1
        else:
            d = _find_divisor(m)
            stack.extend((d, m // d))
    return Factorization._trusted(tuple(sorted(counts.items())))


def _factor_with(n: int, sieve: SpfSieve) -> Factorization:
    if n <= sieve.limit:
        return Factorization._trusted(tuple(_spf_entries(n, sieve.spf)))
    return _factor_large(n, sieve)


@functools.lru_cache(maxsize=1 << 17)
def _factor_default(n: int) -> Factorization:
    return _factor_with(n, default_sieve())


def factor(n: int, sieve: SpfSieve | None = None) -> Factorization:
    """Canonical factorization of ``n`` for ``1 <= n < 2**64``.

    Uses the sieve table when ``n`` is within its limit; otherwise strips small
    primes by trial division and splits the cofactor with Miller-Rabin and
    Pollard-Brent rho.  Results for the shared sieve are memoized.

    >>> factor(360).as_dict()
    {2: 3, 3: 2, 5: 1}
    """
    n = as_natural(n)
    if sieve is None:
        return _factor_default(n)
    return _factor_with(n, sieve)


def valuation(n: int, p: int) -> int:
    """Largest ``k`` with ``p**k`` dividing ``n``."""
    n = as_natural(n)
    if isinstance(p, bool) or not isinstance(p, (int, np.integer)) or not is_prime(int(p)):
        raise InvalidArgumentError(f"{p!r} is not a prime")
    p = int(p)
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def big_omega(n: int) -> int:
    """Number of prime factors of ``n`` counted with multiplicity."""
    return factor(n).big_omega


def primes_up_to(n: int, sieve: SpfSieve | None = None) -> list[int]:
    """All primes ``<= n`` in increasing order."""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise InvalidArgumentError(f"n must be an integer, got {n!r}")
    n = int(n)
    if n < 2:
        raise InvalidArgumentError(f"n must be >= 2, got {n}")
    sieve = sieve or default_sieve()
    if n > sieve.limit:
        raise OutOfRangeError(f"{n} exceeds sieve limit {sieve.limit}")
    primes = sieve.primes
    return primes[: int(np.searchsorted(primes, n, side="right"))].tolist()


def prime_rank(p: int, sieve: SpfSieve | None = None) -> int:
    """1-based index of the prime ``p`` in 2, 3, 5, 7, ... (so ``prime_rank(2) == 1``)."""
    if sieve is None:
        return _prime_rank_default(p)
    return _prime_rank(p, sieve)


def _prime_rank(p: int, sieve: SpfSieve) -> int:
    if p > sieve.limit:
        raise OutOfRangeError(f"prime {p} exceeds sieve limit {sieve.limit}; rank unavailable")
    if p < 2 or not sieve.is_prime(p):
        raise InvalidArgumentError(f"{p} is not a prime")
    return int(np.searchsorted(sieve.primes, p)) + 1


@functools.lru_cache(maxsize=1 << 16)
def _prime_rank_default(p: int) -> int:
    return _prime_rank(p, default_sieve())
