"""
The arithmetic distance between natural numbers.

``dist(a, b)`` counts the prime multiplications and divisions separating ``a``
from ``b``: the l1 distance between their exponent vectors.  It equals
``Omega(lcm(a, b)) - Omega(gcd(a, b))``, which ``dist_via_lcm_gcd`` evaluates
along an independent code path.

Neither routine multiplies out ``lcm(a, b)``, so the distance is defined for
every pair of 64-bit naturals even when their lcm is not.
"""

from __future__ import annotations

from typing import Literal

from .errors import InvalidArgumentError, OutOfRangeError
from .factor_core import U64_MAX, Factorization, as_natural, factor


def factor_distance(fa: Factorization, fb: Factorization) -> int:
    """Sum of ``|v_p(a) - v_p(b)|`` over the union of both supports."""
    rest = dict(fa.entries)
    total = 0
    for p, e in fb.entries:
        total += abs(rest.pop(p, 0) - e)
    return total + sum(rest.values())


def dist(a: int, b: int) -> int:
    """Arithmetic distance between two naturals.

    >>> dist(11, 12)
    4
    """
    a = as_natural(a, "a")
    b = as_natural(b, "b")
    if a == b:
        return 0
    return factor_distance(factor(a), factor(b))


def lcm_gcd_exponents(a: int, b: int) -> tuple[Factorization, Factorization]:
    """Factorizations of ``(lcm(a, b), gcd(a, b))`` via per-prime max and min."""
    fa = factor(as_natural(a, "a"))
    fb = factor(as_natural(b, "b"))
    lcm: list[tuple[int, int]] = []
    gcd: list[tuple[int, int]] = []
    i = j = 0
    ea, eb = fa.entries, fb.entries
    while i < len(ea) or j < len(eb):
        if j == len(eb) or (i < len(ea) and ea[i][0] < eb[j][0]):
            lcm.append(ea[i])
            i += 1
        elif i == len(ea) or eb[j][0] < ea[i][0]:
            lcm.append(eb[j])
            j += 1
        else:
            p = ea[i][0]
            hi, lo = max(ea[i][1], eb[j][1]), min(ea[i][1], eb[j][1])
            lcm.append((p, hi))
            if lo:
                gcd.append((p, lo))
            i += 1
            j += 1
    return Factorization._trusted(tuple(lcm)), Factorization._trusted(tuple(gcd))


def dist_via_lcm_gcd(a: int, b: int) -> int:
    """``Omega(lcm(a, b)) - Omega(gcd(a, b))`` from exponent max/min."""
    lcm, gcd = lcm_gcd_exponents(a, b)
    return lcm.big_omega - gcd.big_omega


def is_unit_step(a: int, b: int) -> int | None:
    """The prime ``p`` with ``b == a * p`` or ``a == b * p``, else ``None``."""
    a = as_natural(a, "a")
    b = as_natural(b, "b")
    lo, hi = min(a, b), max(a, b)
    if hi % lo:
        return None
    q = hi // lo
    f = factor(q)
    if len(f) == 1 and f.entries[0][1] == 1:
        return q
    return None


def geodesic_through(a: int, b: int, via: Literal["lcm", "gcd"] = "gcd") -> list[int]:
    """A shortest path from ``a`` to ``b`` passing through ``lcm`` or ``gcd``.

    Consecutive entries differ by one prime factor.  Towards the gcd the path
    first divides ``a`` down (primes in increasing order) and then multiplies
    up to ``b``; towards the lcm it multiplies up first and then divides down.

    >>> geodesic_through(11, 12, via="gcd")
    [11, 1, 2, 4, 12]
    """
    a = as_natural(a, "a")
    b = as_natural(b, "b")
    if via not in ("lcm", "gcd"):
        raise InvalidArgumentError(f"via must be 'lcm' or 'gcd', got {via!r}")
    fa, fb = factor(a).as_dict(), factor(b).as_dict()
    primes = sorted(fa.keys() | fb.keys())
    # Positive entries: b has more copies of p than a.
    delta = {p: fb.get(p, 0) - fa.get(p, 0) for p in primes}

    path = [a]
    x = a

    def down():
        nonlocal x
        for p in primes:
            for _ in range(-delta[p]):
                x //= p
                path.append(x)

    def up():
        nonlocal x
        for p in primes:
            for _ in range(delta[p]):
                x *= p
                if x > U64_MAX:
                    raise OutOfRangeError("lcm(a, b) does not fit in 64 bits; use via='gcd'")
                path.append(x)

    if via == "gcd":
        down()
        up()
    else:
        up()
        down()
    return path
