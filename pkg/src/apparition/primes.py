"""Prime generation and small-integer factorization.

The sweeps only ever factor p - 1 or p + 1 for primes p below the sieve
limit, so every prime factor needed is at most sqrt(limit + 1) and trial
division by sieved primes is complete.  A cached smallest-prime-factor
table accelerates the bulk sweeps for moderate limits.
"""

from __future__ import annotations

from bisect import bisect_right
from math import isqrt
from typing import Iterator

_SEGMENT = 1 << 17

# grow-only caches
_base_primes: list = [2, 3, 5, 7]
_base_limit = 10
_spf: list = []


def _simple_sieve(limit: int) -> list:
    mask = bytearray([1]) * (limit + 1)
    mask[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if mask[i]:
            step = len(range(i * i, limit + 1, i))
            mask[i * i :: i] = b"\x00" * step
    return [i for i in range(2, limit + 1) if mask[i]]


def base_primes(limit: int) -> list:
    """Primes up to limit, from a grow-only module cache."""
    global _base_primes, _base_limit
    if limit > _base_limit:
        _base_primes = _simple_sieve(limit)
        _base_limit = limit
    return _base_primes[: bisect_right(_base_primes, limit)]


def primes_in_range(lo: int, hi: int) -> list:
    """Primes p with lo <= p <= hi via a sieved segment."""
    if hi < 2 or hi < lo:
        return []
    lo = max(lo, 2)
    base = base_primes(isqrt(hi))
    size = hi - lo + 1
    mask = bytearray([1]) * size
    for q in base:
        start = max(q * q, ((lo + q - 1) // q) * q)
        if start > hi:
            continue
        mask[start - lo :: q] = b"\x00" * len(range(start, hi + 1, q))
    if lo == 1:
        mask[0] = 0
    return [lo + i for i in range(size) if mask[i]]


def iter_primes(limit: int, start: int = 2) -> Iterator[int]:
    """Yield primes in [start, limit] ascending, one segment at a time."""
    lo = max(start, 2)
    while lo <= limit:
        hi = min(lo + _SEGMENT - 1, limit)
        yield from primes_in_range(lo, hi)
        lo = hi + 1


def sieve(limit: int) -> list:
    """All primes <= limit, ascending (segmented internally)."""
    if limit < 2:
        raise ValueError("limit must be >= 2")
    return list(iter_primes(limit))


def factorize(n: int) -> dict:
    """Complete factorization {prime: exponent} by trial division."""
    if n < 1:
        raise ValueError("n must be positive")
    if _base_limit * _base_limit < n:
        base_primes(isqrt(n))
    out: dict = {}
    m = n
    for q in _base_primes:
        if q * q > m:
            break
        if m % q == 0:
            e = 0
            while m % q == 0:
                m //= q
                e += 1
            out[q] = e
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def spf_table(bound: int) -> list:
    """Smallest-prime-factor table for 0..bound (cached, grow-only)."""
    global _spf
    if len(_spf) <= bound:
        table = list(range(bound + 1))
        for i in range(2, isqrt(bound) + 1):
            if table[i] == i:
                for j in range(i * i, bound + 1, i):
                    if table[j] == j:
                        table[j] = i
        _spf = table
    return _spf


def distinct_prime_factors(n: int, spf=None) -> list:
    """Distinct primes dividing n, ascending."""
    if spf is not None and n < len(spf):
        out = []
        while n > 1:
            q = spf[n]
            out.append(q)
            while n % q == 0:
                n //= q
        return out
    return list(factorize(n))
