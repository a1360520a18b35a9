"""
Small number-theory helpers for the ring families.
"""
from itertools import islice
from math import gcd, isqrt, log
from typing import Iterator, List


def _primes_below(bound: int) -> Iterator[int]:
    sieve = [True] * bound
    for p in range(2, bound):
        if sieve[p]:
            yield p
            for i in range(p * p, bound, p):
                sieve[i] = False


def first_primes(count: int) -> List[int]:
    """The first `count` primes in increasing order (2, 3, 5, ...)."""
    if count <= 0:
        return []
    # Rosser's bound on the count-th prime, padded for small counts
    bound = int(count * (log(count) + log(log(count)))) + 1 if count > 5 else 14
    return list(islice(_primes_below(bound), count))


def divisors(n: int) -> List[int]:
    """Positive divisors of n > 0 in increasing order."""
    small, large = [], []
    for i in range(1, isqrt(n) + 1):
        q, r = divmod(n, i)
        if r == 0:
            small.append(i)
            if q != i:
                large.append(q)
    return small + large[::-1]


def divides(a: int, b: int) -> bool:
    """a | b over the integers (0 divides only 0)."""
    if a == 0:
        return b == 0
    return b % a == 0


def strictly_divides(a: int, b: int) -> bool:
    """a || b: a divides b and b does not divide a."""
    return divides(a, b) and not divides(b, a)


def is_proper_integer(d: int) -> bool:
    """Nonzero non-unit of Z."""
    return abs(d) >= 2


def are_coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
