"""
Sums of two coprime squares and flat tori with many equal-length curves.

On the square torus tau = i the slope (a, b) has length sqrt(a^2 + b^2), so the
number of coprime representations of N counts curves of length sqrt(N). A
product of n distinct primes = 1 (mod 4) has 2^(n-1) of them.
"""

from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt, prod
from typing import List, Sequence, Tuple

import sympy
from sympy.solvers.diophantine.diophantine import sum_of_squares

from src.errors import DomainError

Pair = Tuple[int, int]


@dataclass(frozen=True)
class HighMultiplicity:
    n: int
    primes: Tuple[int, ...]
    N: int
    representations: Tuple[Pair, ...]

    @property
    def multiplicity(self) -> int:
        return len(self.representations)


def coprime_reps(N: int) -> List[Pair]:
    """Unordered pairs a <= b of positive coprime integers with a^2 + b^2 = N."""
    if N < 1:
        raise DomainError(f"N must be positive, got {N}")
    reps = []
    for a in range(1, isqrt(N // 2) + 1):
        b_squared = N - a * a
        b = isqrt(b_squared)
        if b * b == b_squared and b >= a and gcd(a, b) == 1:
            reps.append((a, b))
    return reps


def coprime_rep_count(N: int) -> int:
    return len(coprime_reps(N))


def primes_one_mod_four(n: int) -> List[int]:
    """The n smallest primes congruent to 1 mod 4."""
    if n < 1:
        raise DomainError(f"Need at least one prime, got n={n}")
    primes = []
    limit = 8 * n + 16
    while len(primes) < n:
        primes = [p for p in sympy.primerange(2, limit) if p % 4 == 1][:n]
        limit *= 2
    return primes


def gaussian_products(primes: Sequence[int]) -> List[Pair]:
    """
    Coprime representations of prod(primes) built from Gaussian prime factors.

    Each p = u^2 + v^2 splits as (u + vi)(u - vi); picking one factor per prime
    and multiplying gives a representation. Fixing the choice for the first
    prime removes global conjugation, leaving 2^(n-1) products.
    """
    factors = []
    for p in primes:
        if not sympy.isprime(p) or p % 4 != 1:
            raise DomainError(f"{p} is not a prime congruent to 1 mod 4")
        u, v = next(iter(sum_of_squares(p, 2)))
        factors.append((u, v))
    if len(set(primes)) != len(primes):
        raise DomainError("Primes must be distinct")

    reps = set()
    for signs in product((1, -1), repeat=max(len(factors) - 1, 0)):
        re, im = 1, 0
        for (u, v), sign in zip(factors, (1,) + signs):
            re, im = re * u - im * sign * v, re * sign * v + im * u
        a, b = sorted((abs(re), abs(im)))
        reps.add((a, b))
    return sorted(reps)


def construct_high_multiplicity(n: int) -> HighMultiplicity:
    """Product of the n smallest primes = 1 (mod 4) with its 2^(n-1) coprime representations."""
    primes = primes_one_mod_four(n)
    return HighMultiplicity(
        n=n,
        primes=tuple(primes),
        N=prod(primes),
        representations=tuple(gaussian_products(primes)),
    )
