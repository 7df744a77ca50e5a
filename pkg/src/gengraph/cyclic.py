"""Number-theoretic core: generators of Z_n, Euler totient, primality."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CyclicGroupDescriptor:
    """The additive group Z_n together with its generator set."""

    order: int
    generators: tuple[int, ...]
    generator_count: int
    is_prime_order: bool


def describe_group(n: int) -> CyclicGroupDescriptor:
    """Identify the generators of Z_n, the residues in [1, n-1] coprime to n.

    Raises ValueError for n <= 1 (trivial group excluded).
    """
    if n <= 1:
        raise ValueError(f"group order must be at least 2 (trivial group excluded), got {n}")
    gens = tuple(k for k in range(1, n) if math.gcd(k, n) == 1)
    return CyclicGroupDescriptor(
        order=n,
        generators=gens,
        generator_count=len(gens),
        is_prime_order=is_prime(n),
    )


def totient(n: int) -> int:
    """Euler's totient, from the trial-division factorization of n."""
    if n < 1:
        raise ValueError(f"totient requires n >= 1, got {n}")
    result = n
    remaining = n
    p = 2
    while p * p <= remaining:
        if remaining % p == 0:
            result -= result // p
            while remaining % p == 0:
                remaining //= p
        p += 1 if p == 2 else 2
    if remaining > 1:
        result -= result // remaining
    return result


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality test."""
    if n < 1:
        raise ValueError(f"primality requires n >= 1, got {n}")
    if n < 4:
        return n >= 2
    if n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True
