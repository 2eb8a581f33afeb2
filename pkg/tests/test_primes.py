from math import isqrt

from hypothesis import given
from hypothesis import strategies as st

import pytest

from apparition.primes import (
    distinct_prime_factors,
    factorize,
    iter_primes,
    primes_in_range,
    sieve,
    spf_table,
)


def _is_prime_td(n):
    if n < 2:
        return False
    return all(n % i for i in range(2, isqrt(n) + 1))


def test_small():
    assert sieve(10) == [2, 3, 5, 7]
    assert sieve(2) == [2]
    with pytest.raises(ValueError):
        sieve(1)


def test_against_trial_division():
    marked = set(sieve(10**5))
    for n in range(2, 10**5 + 1):
        assert (n in marked) == _is_prime_td(n)


def test_pi_of_a_million():
    assert len(sieve(10**6)) == 78498


def test_segmented_matches_direct():
    assert list(iter_primes(10**4)) == sieve(10**4)
    assert primes_in_range(1000, 2000) == [p for p in sieve(2000) if p >= 1000]
    assert primes_in_range(0, 1) == []
    assert primes_in_range(9999990, 10000010) == [9999991]  # straddles a segment boundary


def test_factorize_examples():
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(1) == {}
    assert factorize(10**6 + 1) == {101: 1, 9901: 1}
    with pytest.raises(ValueError):
        factorize(0)


def test_factorize_reconstruction_range():
    for n in range(1, 5000):
        prod = 1
        for q, e in factorize(n).items():
            assert _is_prime_td(q)
            prod *= q**e
        assert prod == n


@given(st.integers(1, 10**6))
def test_factorize_reconstruction_random(n):
    prod = 1
    for q, e in factorize(n).items():
        prod *= q**e
    assert prod == n


def test_spf_consistency():
    spf = spf_table(5000)
    for n in range(2, 5000):
        assert distinct_prime_factors(n, spf) == sorted(factorize(n))
