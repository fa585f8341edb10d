"""Compiled 64-bit factorization: trial division, Miller-Rabin, Pollard-Brent.

All modular arithmetic is done in Montgomery form over uint64, so no 128-bit
integer type is needed.  ``factor_u64`` is the entry point; ``factor_core``
imports this module lazily, on the first input above the sieve limit.
"""

import numpy as np
from numba import njit, uint64

_MASK32 = np.uint64(0xFFFFFFFF)
_S32 = np.uint64(32)
_ZERO = np.uint64(0)
_ONE = np.uint64(1)
_TWO = np.uint64(2)
_BATCH = np.uint64(64)

# Upper bounds for the witness tiers (same tiers as the pure-Python test).
_MR_B5 = np.uint64(2_152_302_898_747)
_MR_B6 = np.uint64(3_474_749_660_383)
_MR_B7 = np.uint64(341_550_071_728_321)
_MR_B9 = np.uint64(3_825_123_056_546_413_051)
_MR_WITNESSES = np.array([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37], dtype=np.uint64)

_MAX_ATTEMPTS = 64


@njit(uint64(uint64, uint64), cache=True)
def _mulhi(a, b):
    a_lo = a & _MASK32
    a_hi = a >> _S32
    b_lo = b & _MASK32
    b_hi = b >> _S32
    lo_lo = a_lo * b_lo
    hi_lo = a_hi * b_lo
    lo_hi = a_lo * b_hi
    cross = (lo_lo >> _S32) + (hi_lo & _MASK32) + lo_hi
    return (hi_lo >> _S32) + (cross >> _S32) + a_hi * b_hi


@njit(uint64(uint64, uint64, uint64, uint64), cache=True)
def _mont_mul(a, b, n, ninv):
    # a * b / 2**64 mod n for a, b < n; ninv = n**-1 mod 2**64.
    hi = _mulhi(a, b)
    mn = _mulhi(a * b * ninv, n)
    if hi >= mn:
        return hi - mn
    return hi + (n - mn)


@njit(uint64(uint64, uint64, uint64), cache=True)
def _add_mod(a, b, n):
    s = a + b
    if s >= n or s < a:
        s -= n
    return s


@njit(uint64(uint64, uint64), cache=True)
def _gcd(a, b):
    while b != _ZERO:
        a, b = b, a % b
    return a


@njit(uint64(uint64), cache=True)
def _inverse_2_64(n):
    inv = n
    for _ in range(5):
        inv *= _TWO - n * inv
    return inv


@njit(uint64(uint64), cache=True)
def _r_squared(n):
    # 2**128 mod n by doubling 2**64 mod n another 64 times.
    r = (_ZERO - n) % n
    for _ in range(64):
        r = _add_mod(r, r, n)
    return r


@njit(cache=True)
def is_prime_u64(n):
    if n < _TWO:
        return False
    for i in range(_MR_WITNESSES.size):
        p = _MR_WITNESSES[i]
        if n % p == _ZERO:
            return n == p
    if n < np.uint64(37 * 37):
        return True
    if n < _MR_B5:
        k = 5
    elif n < _MR_B6:
        k = 6
    elif n < _MR_B7:
        k = 7
    elif n < _MR_B9:
        k = 9
    else:
        k = 12
    ninv = _inverse_2_64(n)
    r2 = _r_squared(n)
    one = (_ZERO - n) % n
    minus_one = n - one
    d = n - _ONE
    s = 0
    while d & _ONE == _ZERO:
        d >>= _ONE
        s += 1
    for i in range(k):
        base = _mont_mul(_MR_WITNESSES[i], r2, n, ninv)
        x = one
        e = d
        while e != _ZERO:
            if e & _ONE:
                x = _mont_mul(x, base, n, ninv)
            base = _mont_mul(base, base, n, ninv)
            e >>= _ONE
        if x == one or x == minus_one:
            continue
        composite = True
        for _ in range(s - 1):
            x = _mont_mul(x, x, n, ninv)
            if x == minus_one:
                composite = False
                break
        if composite:
            return False
    return True


@njit(uint64(uint64, uint64, uint64), cache=True)
def brent(n, c, y0):
    """One Brent run on odd ``n``; returns a divisor, possibly ``n`` itself."""
    ninv = _inverse_2_64(n)
    c = c % n
    y = y0 % n
    x = y
    ys = y
    g = _ONE
    r = _ONE
    q = _ONE
    while g == _ONE:
        x = y
        i = _ZERO
        while i < r:
            y = _add_mod(_mont_mul(y, y, n, ninv), c, n)
            i += _ONE
        k = _ZERO
        while k < r and g == _ONE:
            ys = y
            steps = _BATCH if r - k > _BATCH else r - k
            j = _ZERO
            while j < steps:
                y = _add_mod(_mont_mul(y, y, n, ninv), c, n)
                q = _mont_mul(q, x - y if x > y else y - x, n, ninv)
                j += _ONE
            g = _gcd(q, n)
            k += _BATCH
        r *= _TWO
    if g == n or g == _ZERO:
        i = _ZERO
        while i < r:
            ys = _add_mod(_mont_mul(ys, ys, n, ninv), c, n)
            g = _gcd(x - ys if x > ys else ys - x, n)
            if g > _ONE:
                break
            i += _ONE
    return g


@njit(cache=True)
def _split(n):
    # A nontrivial divisor of an odd composite n; 0 if every attempt fails.
    r = np.uint64(np.sqrt(np.float64(n)))
    if r > _MASK32:
        r = _MASK32
    while r * r > n:
        r -= _ONE
    while r < _MASK32 and (r + _ONE) * (r + _ONE) <= n:
        r += _ONE
    if r * r == n:
        return r
    for attempt in range(1, _MAX_ATTEMPTS + 1):
        a = np.uint64(attempt)
        g = brent(n, a, a + _ONE)
        if g > _ONE and g < n:
            return g
    return _ZERO


@njit(cache=True)
def factor_u64(n, spf, trial_primes):
    """Prime factors of ``n`` with multiplicity, ascending, and their count.

    ``spf`` is the sieve table (its length - 1 is the limit) and
    ``trial_primes`` the primes stripped by trial division first.  A count of
    -1 signals that Brent failed to split some cofactor.
    """
    out = np.zeros(64, dtype=np.uint64)
    count = 0
    limit = np.uint64(spf.size - 1)
    m = n
    bound = _ONE
    for i in range(trial_primes.size):
        p = np.uint64(trial_primes[i])
        bound = p
        if p * p > m:
            break
        while m % p == _ZERO:
            m //= p
            out[count] = p
            count += 1
    stack = np.zeros(64, dtype=np.uint64)
    top = 0
    if m > _ONE:
        stack[0] = m
        top = 1
    while top > 0:
        top -= 1
        m = stack[top]
        if m <= limit:
            while m > _ONE:
                p = np.uint64(spf[np.int64(m)])
                m //= p
                out[count] = p
                count += 1
        elif m < (bound + _ONE) * (bound + _ONE) or is_prime_u64(m):
            out[count] = m
            count += 1
        else:
            d = _split(m)
            if d == _ZERO:
                return out, -1
            stack[top] = d
            stack[top + 1] = m // d
            top += 2
    return np.sort(out[:count]), count
