"""Primality, prime ranges and the Legendre symbol."""

import logging
from functools import lru_cache

from delannoy_schroder.core.exact.errors import NotPrimeError

logger = logging.getLogger(__name__)

MAX_PRIME = 2**64

# Deterministic Miller-Rabin witnesses, valid for every n < 2^64
_WITNESSES_64 = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)
_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_composite_witness(n: int, s: int, d: int, a: int) -> bool:
    """Check compositeness of n with witness a, where d * 2^s = n - 1 and d is odd."""
    a %= n
    if a == 0:
        return False
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(1, s):
        x = x * x % n
        if x == n - 1:
            return False
        if x == 1:
            return True
    return True


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin test for 0 <= n < 2^64."""
    if n >= MAX_PRIME:
        raise NotPrimeError(f"Primality of {n} is not decidable below 2^64")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_is_composite_witness(n, s, d, a) for a in _WITNESSES_64)


def require_odd_prime(p: int) -> int:
    """Return p unchanged, or raise NotPrimeError if it is not an odd prime."""
    if p == 2 or not is_prime(p):
        raise NotPrimeError(f"Expected an odd prime, got {p}")
    return p


@lru_cache(maxsize=32)
def _sieve(limit: int) -> tuple[bool, ...]:
    flags = [False, False] + [True] * max(limit - 1, 0)
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(range(i * i, limit + 1, i))
    return tuple(flags[: limit + 1])


def odd_primes(lo: int, hi: int) -> list[int]:
    """Odd primes p with lo <= p < hi, in increasing order."""
    if hi <= 3:
        return []
    flags = _sieve(hi)
    return [p for p in range(max(lo, 3), hi) if flags[p]]


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of |n| by trial division, in increasing order."""
    n = abs(n)
    divisors = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            divisors.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        divisors.append(n)
    return divisors


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) in {-1, 0, 1} by Euler's criterion."""
    require_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r
