"""The ring of integers, handled symbolically.

An ideal nZ is stored by its nonnegative generator n.  Only the facts needed
for the integer examples are provided: purity of nZ, the primes surviving
localization at 1 + nZ, and the radical/kernel comparison.
"""
from __future__ import annotations

from dataclasses import dataclass

FACTOR_LIMIT = 10**6


@dataclass(frozen=True)
class ZIdeal:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("nZ is stored with n >= 0")


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors by trial division."""
    if n < 1 or n > FACTOR_LIMIT:
        raise ValueError(f"factorization input must lie in 1..{FACTOR_LIMIT}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def primes_upto(bound: int) -> list[int]:
    return [q for q in range(2, bound + 1) if is_prime(q)]


def rad(n: int) -> int:
    """Product of the distinct primes dividing n; rad(0) = 0."""
    if n == 0:
        return 0
    out = 1
    for p in prime_factors(n):
        out *= p
    return out


def z_purity(I: ZIdeal) -> tuple[bool, bool]:
    """(pure, N-pure): in a domain only 0 and the whole ring qualify."""
    flag = I.n in (0, 1)
    return flag, flag


def z_spec_localized(n: int) -> list[int]:
    """Primes of (1 + nZ)^-1 Z as generators: 0 and the primes dividing n.

    qZ meets 1 + nZ exactly when 1 + kn = 0 mod q is solvable, i.e. when q
    does not divide n.
    """
    if n < 2:
        raise ValueError("localization at 1 + nZ needs n >= 2")
    return [0] + prime_factors(n)


def survives_localization(q: int, n: int) -> bool:
    """Search k = 0..q for q | 1 + kn; qZ survives iff there is none."""
    return not any((1 + k * n) % q == 0 for k in range(q + 1))


def brute_force_spec_localized(n: int, prime_bound: int) -> list[int]:
    return [0] + [q for q in primes_upto(prime_bound) if survives_localization(q, n)]


@dataclass(frozen=True)
class RadicalKernelFacts:
    n: int
    radical: int
    kernel: int
    criterion_iv: bool


def z_radical_kernel_facts(n: int) -> RadicalKernelFacts:
    """sqrt(nZ) = rad(n)Z; Z is a domain so the localization map is injective."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    r = rad(n)
    return RadicalKernelFacts(n=n, radical=r, kernel=0, criterion_iv=r in (0, 1))


@dataclass(frozen=True)
class LocalizedExample:
    n: int
    primes: list
    quotient_is_field: bool
    localization_is_field: bool

    @property
    def flag(self) -> str:
        if self.quotient_is_field and not self.localization_is_field:
            return "quotient is a field, localization is not"
        return ""


def localized_example(n: int) -> LocalizedExample:
    """Z/nZ against (1 + nZ)^-1 Z: the latter is a field iff its only prime is 0."""
    primes = z_spec_localized(n)
    return LocalizedExample(n, primes, quotient_is_field=is_prime(n),
                            localization_is_field=len(primes) == 1)
