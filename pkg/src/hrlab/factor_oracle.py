"""Brute-force factorization used as ground truth for the sieve.

Everything here is deliberately slow and obvious: deterministic trial
division up to sqrt(n), no probabilistic primality anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, prod

MAX_N = 2**63 - 1


def _check(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int):
        try:
            n = int(n)
        except (TypeError, ValueError):
            raise TypeError(f"expected an integer, got {n!r}") from None
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > MAX_N:
        raise ValueError(f"n must be at most 2**63 - 1, got {n}")
    return n


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    i = 5
    while i * i <= n:
        if n % i == 0 or n % (i + 2) == 0:
            return False
        i += 6
    return True


@dataclass(frozen=True)
class FactorMap:
    """Prime factorization of one integer as ``(prime, exponent)`` pairs.

    Primes are strictly increasing and exponents positive. The empty map
    is the factorization of 1.
    """

    entries: tuple[tuple[int, int], ...] = ()

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.entries)

    def value(self) -> int:
        """Multiply the factorization back out."""
        return prod(p**e for p, e in self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def validate(self) -> None:
        """Raise ``ValueError`` if the map breaks any structural invariant."""
        last = 1
        for p, e in self.entries:
            if p <= last:
                raise ValueError(f"primes not strictly increasing at {p}")
            if e < 1:
                raise ValueError(f"exponent of {p} is {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            last = p


def factor_small(n: int) -> FactorMap:
    """Factor ``n`` exactly by trial division.

    Parameters
    ----------
    n : int
        Integer in ``[1, 2**63 - 1]``.

    Returns
    -------
    FactorMap
        ``factor_small(12).as_dict() == {2: 2, 3: 1}``; ``factor_small(1)``
        is empty.
    """
    n = _check(n)
    entries = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            entries.append((p, e))
    i = 5
    limit = isqrt(n)
    while i <= limit:
        for p in (i, i + 2):
            if n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                entries.append((p, e))
                limit = isqrt(n)
        i += 6
    if n > 1:
        entries.append((n, 1))
    return FactorMap(tuple(entries))


def omega(n: int) -> int:
    """Number of distinct prime divisors; ``omega(1) == 0``."""
    return len(factor_small(n))


def big_omega(n: int) -> int:
    """Number of prime divisors counted with multiplicity; ``big_omega(1) == 0``."""
    return sum(e for _, e in factor_small(n))


def is_squarefree(n: int) -> bool:
    """True when no prime divides ``n`` twice (so 1 is squarefree)."""
    return all(e == 1 for _, e in factor_small(n))
