"""
Positive reals with finitely many rational prime exponents.

An ``ExtendedNumber`` is ``prod p**alpha_p`` with each ``alpha_p`` an exact
``Fraction``.  This covers the positive rationals (integer exponents of either
sign) and radicals such as ``2**(1/2)``.  The distance between two of them is
the l1 distance of their exponent vectors, which agrees with ``metric.dist`` on
the naturals.

Exponent numerators and denominators are kept below 2**127 in magnitude;
anything larger raises ``OutOfRangeError``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping

from .errors import InvalidArgumentError, OutOfRangeError
from .factor_core import as_natural, factor, is_prime, prime_rank

_EXP_BOUND = 2**127


def _checked(q: Fraction) -> Fraction:
    if abs(q.numerator) >= _EXP_BOUND or q.denominator >= _EXP_BOUND:
        raise OutOfRangeError(f"exponent {q} exceeds 128-bit rational range")
    return q


@dataclass(frozen=True)
class ExtendedNumber:
    """Finite map ``prime -> nonzero Fraction``, sorted by prime; empty means 1."""

    entries: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, a in self.entries:
            if p <= prev:
                raise InvalidArgumentError("primes must be strictly increasing")
            if not isinstance(a, Fraction) or a == 0:
                raise InvalidArgumentError(f"exponent of {p} must be a nonzero Fraction")
            if not is_prime(p):
                raise InvalidArgumentError(f"{p} is not prime")
            _checked(a)
            prev = p

    @classmethod
    def _trusted(cls, exponents: Mapping[int, Fraction]) -> "ExtendedNumber":
        obj = object.__new__(cls)
        entries = tuple(sorted((p, _checked(a)) for p, a in exponents.items() if a != 0))
        object.__setattr__(obj, "entries", entries)
        return obj

    @classmethod
    def from_mapping(cls, exponents: Mapping[int, Fraction | int]) -> "ExtendedNumber":
        return cls(tuple(sorted((int(p), Fraction(a)) for p, a in exponents.items() if a != 0)))

    def __getitem__(self, p: int) -> Fraction:
        for q, a in self.entries:
            if q == p:
                return a
        return Fraction(0)

    def __iter__(self) -> Iterator[tuple[int, Fraction]]:
        return iter(self.entries)

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.entries)

    def __mul__(self, other: "ExtendedNumber") -> "ExtendedNumber":
        if not isinstance(other, ExtendedNumber):
            return NotImplemented
        out = self.as_dict()
        for p, a in other.entries:
            out[p] = out.get(p, Fraction(0)) + a
        return ExtendedNumber._trusted(out)

    def __truediv__(self, other: "ExtendedNumber") -> "ExtendedNumber":
        if not isinstance(other, ExtendedNumber):
            return NotImplemented
        return self * other.inverse()

    def inverse(self) -> "ExtendedNumber":
        return ExtendedNumber._trusted({p: -a for p, a in self.entries})

    def __str__(self) -> str:
        if not self.entries:
            return "1"
        return " * ".join(f"{p}^{a}" if a != 1 else str(p) for p, a in self.entries)


ONE = ExtendedNumber()


def from_rational(numerator: int, denominator: int = 1) -> ExtendedNumber:
    """Exponent map of ``numerator / denominator``."""
    num = as_natural(numerator, "numerator")
    den = as_natural(denominator, "denominator")
    out: dict[int, Fraction] = {p: Fraction(e) for p, e in factor(num)}
    for p, e in factor(den):
        out[p] = out.get(p, Fraction(0)) - e
    return ExtendedNumber._trusted(out)


def nth_root(x: ExtendedNumber, n: int) -> ExtendedNumber:
    """``x ** (1/n)``, exponents divided exactly."""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InvalidArgumentError(f"root index must be an integer >= 1, got {n!r}")
    return ExtendedNumber._trusted({p: a / n for p, a in x.entries})


def ext_dist(x: ExtendedNumber, y: ExtendedNumber) -> Fraction:
    """Exact l1 distance between exponent vectors, merged by prime."""
    # Accumulate num/den as plain ints and reduce once; building a Fraction per
    # term dominates the cost otherwise.
    num, den = 0, 1
    ex, ey = x.entries, y.entries
    i = j = 0
    while i < len(ex) or j < len(ey):
        if j == len(ey) or (i < len(ex) and ex[i][0] < ey[j][0]):
            a = ex[i][1]
            tn, td = abs(a.numerator), a.denominator
            i += 1
        elif i == len(ex) or ey[j][0] < ex[i][0]:
            b = ey[j][1]
            tn, td = abs(b.numerator), b.denominator
            j += 1
        else:
            a, b = ex[i][1], ey[j][1]
            tn = abs(a.numerator * b.denominator - b.numerator * a.denominator)
            td = a.denominator * b.denominator
            i += 1
            j += 1
        if td == den:
            num += tn
        else:
            common = den // math.gcd(den, td) * td
            num, den = num * (common // den) + tn * (common // td), common
    return _checked(Fraction(num, den))


def ext_big_omega(x: ExtendedNumber) -> Fraction:
    """Signed sum of all exponents."""
    return _checked(sum((a for _, a in x.entries), Fraction(0)))


def embed(x: ExtendedNumber) -> dict[int, Fraction]:
    """Exponent sequence indexed by prime rank (2 -> 1, 3 -> 2, 5 -> 3, ...).

    Returned sparsely: ranks missing from the dict are zero.  Primes beyond
    the shared sieve have no computable rank and raise ``OutOfRangeError``.
    """
    return {prime_rank(p): a for p, a in x.entries}


def sequence_difference(u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> dict[int, Fraction]:
    """Componentwise ``u - v`` of two sparse rank-indexed sequences."""
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, 0) - c
    return {k: c for k, c in out.items() if c != 0}


def l1_norm(u: Mapping[int, Fraction]) -> Fraction:
    """Sum of absolute values of a sparse sequence.

    Brings every term to the lcm of all denominators and sums integers.
    """
    terms = [Fraction(c) for c in u.values()]
    common = math.lcm(*(t.denominator for t in terms)) if terms else 1
    return Fraction(sum(abs(t.numerator) * (common // t.denominator) for t in terms), common)


def dense(u: Mapping[int, Fraction], length: int | None = None) -> list[Fraction]:
    """Expand a sparse rank-indexed sequence to ``[u_1, u_2, ..., u_length]``."""
    if length is None:
        length = max(u, default=0)
    return [Fraction(u.get(k, 0)) for k in range(1, length + 1)]


_RATIONAL = r"\s*(\d+)\s*(?:/\s*(\d+)\s*)?"
_ROOT_RE = re.compile(rf"\s*root\(\s*(\d+)\s*,{_RATIONAL}\)\s*$")
_RAT_RE = re.compile(rf"{_RATIONAL}$")


def parse_extended(text: str) -> ExtendedNumber:
    """Parse ``"num"``, ``"num/den"`` or ``"root(k, num/den)"``."""
    m = _ROOT_RE.match(text)
    if m:
        k, num, den = m.groups()
        return nth_root(from_rational(int(num), int(den or 1)), int(k))
    m = _RAT_RE.match(text)
    if m:
        num, den = m.groups()
        return from_rational(int(num), int(den or 1))
    raise InvalidArgumentError(f"cannot parse extended number literal {text!r}")


def format_fraction(q: Fraction) -> str:
    """``p/q`` text for a fraction, or ``p`` when the denominator is 1."""
    return str(q)
