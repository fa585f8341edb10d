"""
Seeded property suites that check the metric's theorems at desk scale.

Every suite draws its samples from ``numpy.random.Generator(PCG64(seed))`` so
runs are reproducible across platforms.  A suite returns a ``SuiteResult``
with the number of individual checks made and the failing cases (capped).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from . import analysis, extended, hasse, index, metric
from .errors import OutOfRangeError
from .factor_core import U64_MAX, big_omega, primes_up_to

MAX_REPORTED_FAILURES = 10


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failed: int = 0
    examples: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.checks > 0 and self.failed == 0

    def check(self, ok: bool, case) -> None:
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.examples) < MAX_REPORTED_FAILURES:
                self.examples.append(case)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status} {self.name}: {self.checks - self.failed}/{self.checks} "
            f"checks passed ({self.seconds:.2f}s)"
        )


def make_rng(seed: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_naturals(rng: np.random.Generator, size, high: int) -> list:
    return rng.integers(1, high, size=size, endpoint=True).tolist()


def random_extended(rng: np.random.Generator, high: int = 10**6) -> extended.ExtendedNumber:
    """A random finite-support element: ``(num/den) ** (1/k)`` times a second such factor."""
    out = extended.ONE
    for _ in range(int(rng.integers(1, 3, endpoint=True))):
        num, den = random_naturals(rng, 2, high)
        k = int(rng.integers(1, 6, endpoint=True))
        out = out * extended.nth_root(extended.from_rational(num, den), k)
    return out


def suite_metric_axioms(rng, samples: int = 10**4, result=None):
    for a, b, c in random_naturals(rng, (samples, 3), 10**6):
        dab, dba = metric.dist(a, b), metric.dist(b, a)
        ok = (
            dab >= 0
            and (dab == 0) == (a == b)
            and dab == dba
            and metric.dist(a, c) <= dab + metric.dist(b, c)
            and metric.dist(a, a) == 0
        )
        result.check(ok, (a, b, c))


def suite_formula_equivalence(rng, samples: int = 10**4, result=None):
    for a, b in random_naturals(rng, (samples, 2), 10**9):
        result.check(metric.dist(a, b) == metric.dist_via_lcm_gcd(a, b), (a, b))


def suite_invariance(rng, samples: int = 10**4, result=None):
    for a, b, c in random_naturals(rng, (samples, 3), 10**6):
        if max(a, b) * c > U64_MAX:
            continue
        result.check(metric.dist(a * c, b * c) == metric.dist(a, b), (a, b, c))


def suite_geodesics(rng, samples: int = 10**4, result=None):
    for a, b in random_naturals(rng, (samples, 2), 10**6):
        d = metric.dist(a, b)
        lcm, gcd = metric.lcm_gcd_exponents(a, b)
        l, g = lcm.value(), gcd.value()
        ok = metric.dist(a, l) + metric.dist(l, b) == d == metric.dist(a, g) + metric.dist(g, b)
        for via, mid in (("gcd", g), ("lcm", l)):
            path = metric.geodesic_through(a, b, via)
            ok = ok and path[0] == a and path[-1] == b and len(path) - 1 == d and mid in path
            ok = ok and all(metric.is_unit_step(x, y) is not None for x, y in zip(path, path[1:]))
        result.check(ok, (a, b))


def suite_unit_step(rng, samples: int = 10**4, result=None):
    # Every multiple pair a | b <= samples exhaustively, plus random non-multiples
    # (where no prime quotient exists and the answer must be None).
    prime_set = set(primes_up_to(max(samples, 2)))
    for a in range(1, samples + 1):
        for b in range(2 * a, samples + 1, a):
            p = metric.is_unit_step(a, b)
            result.check((p is not None) == (b // a in prime_set) and p in (None, b // a), (a, b))
    for a, b in random_naturals(rng, (samples, 2), samples):
        if a != b and max(a, b) % min(a, b):
            result.check(metric.is_unit_step(a, b) is None, (a, b))


def suite_ball(rng, samples: int = 10**4, result=None):
    for n in (100, samples):
        ball = analysis.closed_ball(1, 1, n)
        result.check(ball == [1] + primes_up_to(n), n)


def suite_diameter(rng, samples: int = 300, result=None):
    for n in range(1, samples + 1):
        value, (x, y) = analysis.diameter_bruteforce(n)
        ok = value == analysis.diameter_formula(n) and metric.dist(x, y) == value
        result.check(ok, n)


def suite_hasse_oracle(rng, samples: int = 200, result=None):
    for n in range(1, samples + 1):
        g = hasse.build_hasse(n)
        for a in range(1, n + 1):
            row = hasse.bfs_distances(g, a)
            for b in range(1, n + 1):
                result.check(row[b] == metric.dist(a, b), (n, a, b))


def suite_index_oracle(rng, samples: int = 10**3, result=None, corpus_size: int = 500):
    corpus = list(range(1, corpus_size + 1))
    order = rng.permutation(corpus).tolist()
    idx = index.BkIndex(order)
    for _ in range(samples):
        x = int(rng.integers(1, 2 * corpus_size, endpoint=True))
        r = int(rng.integers(0, 6, endpoint=True))
        k = int(rng.integers(1, 10, endpoint=True))
        scan = sorted((metric.dist(x, v), v) for v in corpus)
        expected_range = sorted(v for d, v in scan if d <= r)
        got_range, visited = idx.range(x, r, return_visited=True)
        expected_nn = [(v, d) for d, v in scan[:k]]
        ok = got_range == expected_range and visited <= len(idx) and idx.nearest(x, k) == expected_nn
        result.check(ok, (x, r, k))


def suite_extended_isometry(rng, samples: int = 10**4, result=None):
    for _ in range(samples):
        x, y, z = (random_extended(rng) for _ in range(3))
        dxy = extended.ext_dist(x, y)
        norm = extended.l1_norm(extended.sequence_difference(extended.embed(x), extended.embed(y)))
        ok = (
            dxy == norm
            and dxy == extended.ext_dist(y, x)
            and (dxy == 0) == (x == y)
            and extended.ext_dist(x, z) <= dxy + extended.ext_dist(y, z)
            and extended.ext_dist(x * z, y * z) == dxy
        )
        result.check(ok, (str(x), str(y)))
    for a, b in random_naturals(rng, (samples, 2), 10**6):
        ext = extended.ext_dist(extended.from_rational(a), extended.from_rational(b))
        result.check(ext == metric.dist(a, b), (a, b))
    sqrt2 = extended.nth_root(extended.from_rational(2), 2)
    cbrt2 = extended.nth_root(extended.from_rational(2), 3)
    result.check(extended.ext_dist(sqrt2, cbrt2) == Fraction(1, 6), "sqrt2-cbrt2")


def suite_omega_bounds(rng, samples: int = 10**5, result=None):
    for n in range(1, samples + 1):
        w = big_omega(n)
        result.check(w <= analysis.xi(2, n) and (n % 2 == 0 or w <= analysis.xi(3, n)), n)


SUITES: dict[str, Callable] = {
    "metric-axioms": suite_metric_axioms,
    "formula-equivalence": suite_formula_equivalence,
    "invariance": suite_invariance,
    "geodesics": suite_geodesics,
    "unit-step": suite_unit_step,
    "ball": suite_ball,
    "diameter": suite_diameter,
    "hasse-oracle": suite_hasse_oracle,
    "index-oracle": suite_index_oracle,
    "extended-isometry": suite_extended_isometry,
    "omega-bounds": suite_omega_bounds,
}


def run_suite(name: str, seed: int = 0, samples: int | None = None) -> SuiteResult:
    """Run one named suite with a fresh generator seeded by ``seed``."""
    if name not in SUITES:
        raise KeyError(name)
    result = SuiteResult(name)
    kwargs = {} if samples is None else {"samples": samples}
    start = time.perf_counter()
    try:
        SUITES[name](make_rng(seed), result=result, **kwargs)
    except OutOfRangeError as exc:
        result.check(False, f"out of range: {exc}")
    result.seconds = time.perf_counter() - start
    return result


def run_all(seed: int = 0, names=None, samples: int | None = None) -> list[SuiteResult]:
    return [run_suite(name, seed, samples) for name in (names or SUITES)]
