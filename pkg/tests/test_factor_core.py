import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from arithmetic_metric import factor_core as fc
from arithmetic_metric.errors import InvalidArgumentError, OutOfRangeError
from arithmetic_metric.factor_core import (
    Factorization,
    big_omega,
    build_sieve,
    factor,
    primes_up_to,
    valuation,
)
from oracles import trial_factor


@pytest.mark.parametrize("limit, m, expected", [(10, 9, 3), (10, 7, 7), (100, 91, 7)])
def test_sieve_examples(limit, m, expected):
    assert build_sieve(limit).spf[m] == expected


def test_sieve_rejects_small_limit():
    with pytest.raises(InvalidArgumentError):
        build_sieve(1)


def test_sieve_invariants():
    s = build_sieve(10**5)
    m = np.arange(2, s.limit + 1)
    spf = s.spf[2:].astype(np.int64)
    assert np.all(m % spf == 0)
    is_p = spf == m
    assert np.all((spf <= np.sqrt(m)) | is_p)
    # spf[m] == m exactly for primes
    assert set(m[is_p].tolist()) == set(primes_up_to(s.limit, s))


def test_sieve_is_read_only():
    s = build_sieve(50)
    with pytest.raises(ValueError):
        s.spf[4] = 4


@pytest.mark.parametrize(
    "n, expected", [(1, {}), (12, {2: 2, 3: 1}), (360, {2: 3, 3: 2, 5: 1})]
)
def test_factor_examples(n, expected):
    assert factor(n).as_dict() == expected


def test_factor_errors():
    with pytest.raises(InvalidArgumentError):
        factor(0)
    with pytest.raises(InvalidArgumentError):
        factor(-5)
    with pytest.raises(OutOfRangeError):
        factor(2**64)
    with pytest.raises(InvalidArgumentError):
        factor(2.0)


@pytest.mark.parametrize(
    "n, p, expected", [(12, 2, 2), (12, 5, 0), (1, 7, 0), (2**63, 2, 63), (3**40, 3, 40)]
)
def test_valuation(n, p, expected):
    assert valuation(n, p) == expected


def test_valuation_rejects_composite_base():
    with pytest.raises(InvalidArgumentError):
        valuation(12, 4)


@pytest.mark.parametrize("n, expected", [(1, 0), (12, 3), (360, 6)])
def test_big_omega(n, expected):
    assert big_omega(n) == expected


def test_primes_up_to():
    assert primes_up_to(10) == [2, 3, 5, 7]
    assert primes_up_to(2) == [2]
    assert len(primes_up_to(100)) == 25
    small = build_sieve(50)
    with pytest.raises(OutOfRangeError):
        primes_up_to(51, small)


def test_factorization_canonical_form():
    f = Factorization.from_mapping({3: 1, 2: 2, 5: 0})
    assert f.entries == ((2, 2), (3, 1))
    assert f.value() == 12
    assert f[2] == 2 and f[7] == 0
    assert str(f) == "2^2 * 3"
    assert Factorization().value() == 1
    with pytest.raises(InvalidArgumentError):
        Factorization(((4, 1),))
    with pytest.raises(InvalidArgumentError):
        Factorization(((3, 1), (2, 1)))
    with pytest.raises(InvalidArgumentError):
        Factorization(((2, 0),))


def test_factorization_value_overflow():
    with pytest.raises(OutOfRangeError):
        Factorization(((2, 64),)).value()


def test_reconstruction_up_to_1e5():
    for n in range(1, 10**5 + 1):
        assert factor(n).value() == n


def test_reconstruction_random_64bit():
    rng = np.random.Generator(np.random.PCG64(11))
    for n in rng.integers(1, 2**64 - 1, size=10**4, dtype=np.uint64, endpoint=True).tolist():
        f = factor(n)
        assert f.value() == n
        assert all(fc.is_prime(p) for p, _ in f)


def test_sieve_agrees_with_trial_division():
    s = fc.default_sieve()
    for n in range(1, 10**5 + 1):
        assert s.factor(n).as_dict() == trial_factor(n)


def test_beyond_sieve_agrees_with_trial_division():
    small = build_sieve(1000)
    rng = np.random.Generator(np.random.PCG64(3))
    for n in rng.integers(1001, 10**10, size=2000).tolist():
        assert factor(n, small).as_dict() == trial_factor(n)


@pytest.mark.parametrize(
    "n",
    [
        2**64 - 1,
        18446744073709551557,  # largest 64-bit prime
        4294967291 * 4294967279,  # two 32-bit primes
        4294967291**2,
        2**63,
        1000003 * 999983,
        3215031751,  # strong pseudoprime to bases 2, 3, 5, 7
    ],
)
def test_hard_64bit_inputs(n):
    assert factor(n).value() == n
    assert all(fc.is_prime(p) for p, _ in factor(n))


def test_compiled_and_python_routes_agree():
    s = fc.default_sieve()
    rng = np.random.Generator(np.random.PCG64(5))
    for n in rng.integers(s.limit + 1, 2**64 - 1, size=300, dtype=np.uint64).tolist():
        assert fc._factor_large(n, s) == fc._factor_large_py(n, s)


def test_is_prime_small_range_matches_sieve():
    s = build_sieve(10**5)
    flags = [fc.is_prime(n) for n in range(10**5 + 1)]
    assert [n for n, f in enumerate(flags) if f] == primes_up_to(10**5, s)


def test_is_prime_strong_pseudoprimes():
    # Composites that fool some fixed witness sets.
    for n in (2047, 1373653, 25326001, 3215031751, 2152302898747, 3474749660383,
              341550071728321, 3825123056546413051):
        assert not fc.is_prime(n)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 2**32 - 1), st.integers(1, 2**32 - 1))
def test_total_additivity(a, b):
    assert big_omega(a * b) == big_omega(a) + big_omega(b)


def test_total_additivity_seeded_sample():
    rng = np.random.Generator(np.random.PCG64(7))
    pairs = rng.integers(1, 2**32, size=(10**4, 2)).tolist()
    for a, b in pairs:
        assert big_omega(a * b) == big_omega(a) + big_omega(b)


def test_omega_power_bounds():
    for n in range(1, 10**5 + 1):
        w = big_omega(n)
        assert 2**w <= n
        if n % 2:
            assert 3**w <= n


def test_prime_rank():
    assert [fc.prime_rank(p) for p in (2, 3, 5, 7, 11)] == [1, 2, 3, 4, 5]
    assert fc.prime_rank(7919) == 1000
    with pytest.raises(InvalidArgumentError):
        fc.prime_rank(9)


def test_set_default_sieve_limit(monkeypatch):
    try:
        fc.set_default_sieve_limit(100)
        assert fc.default_sieve().limit == 100
        assert factor(10**6 + 3).value() == 10**6 + 3
        with pytest.raises(OutOfRangeError):
            primes_up_to(101)
        fc.set_default_sieve_limit(None)
        monkeypatch.setenv(fc.SIEVE_LIMIT_ENV, "500")
        assert fc.default_sieve().limit == 500
    finally:
        monkeypatch.delenv(fc.SIEVE_LIMIT_ENV, raising=False)
        fc.set_default_sieve_limit(None)
