"""Primes and the finite/cofinite algebra of sets of primes.

A :class:`PrimeSet` is either a finite set of primes or the complement of
one.  This family is closed under union, intersection and complement, and
every set produced by the basis computations in this package lives in it.

>>> PrimeSet.of(2, 3) | PrimeSet.without(2, 5)
PrimeSet.without(5)
>>> 7 in ~PrimeSet.of(7)
False
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def is_prime(n: int) -> bool:
    """Trial-division primality test for small integers."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def check_prime(p: int) -> int:
    """Return ``p`` if it is prime, otherwise raise ``ValueError``."""
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise ValueError(f"not a prime: {p!r}")
    return p


def primes_up_to(bound: int) -> tuple[int, ...]:
    """All primes ``<= bound``, ascending."""
    return tuple(n for n in range(2, bound + 1) if is_prime(n))


def prime_factors(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as an exponent map.

    >>> prime_factors(12)
    {2: 2, 3: 1}
    """
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of primes.

    ``primes`` holds the members when ``is_finite`` and the excluded
    primes otherwise.  Both representations are canonical, so dataclass
    equality is set equality.
    """

    is_finite: bool
    primes: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "primes", frozenset(self.primes))
        for p in self.primes:
            check_prime(p)

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        """The finite set holding exactly ``primes``."""
        return cls(True, frozenset(primes))

    @classmethod
    def without(cls, *primes: int) -> "PrimeSet":
        """The cofinite set of all primes except ``primes``."""
        return cls(False, frozenset(primes))

    @classmethod
    def empty(cls) -> "PrimeSet":
        return cls(True, frozenset())

    @classmethod
    def all_primes(cls) -> "PrimeSet":
        return cls(False, frozenset())

    @property
    def is_empty(self) -> bool:
        return self.is_finite and not self.primes

    def __contains__(self, p: int) -> bool:
        return (p in self.primes) == self.is_finite

    def __or__(self, other: "PrimeSet") -> "PrimeSet":
        if self.is_finite and other.is_finite:
            return PrimeSet(True, self.primes | other.primes)
        if self.is_finite:
            return PrimeSet(False, other.primes - self.primes)
        if other.is_finite:
            return PrimeSet(False, self.primes - other.primes)
        return PrimeSet(False, self.primes & other.primes)

    def __and__(self, other: "PrimeSet") -> "PrimeSet":
        if self.is_finite and other.is_finite:
            return PrimeSet(True, self.primes & other.primes)
        if self.is_finite:
            return PrimeSet(True, self.primes - other.primes)
        if other.is_finite:
            return PrimeSet(True, other.primes - self.primes)
        return PrimeSet(False, self.primes | other.primes)

    def __invert__(self) -> "PrimeSet":
        return PrimeSet(not self.is_finite, self.primes)

    def issubset(self, other: "PrimeSet") -> bool:
        if self.is_finite and other.is_finite:
            return self.primes <= other.primes
        if self.is_finite:
            return not (self.primes & other.primes)
        if other.is_finite:
            return False
        return other.primes <= self.primes

    def sample(self, bound: int = 100) -> Iterator[int]:
        """Members up to ``bound``, ascending.  Used by brute-force checks."""
        for p in primes_up_to(bound):
            if p in self:
                yield p

    def sort_key(self) -> tuple:
        return (0 if self.is_finite else 1, tuple(sorted(self.primes)))

    def __repr__(self) -> str:
        inner = ", ".join(str(p) for p in sorted(self.primes))
        name = "of" if self.is_finite else "without"
        return f"PrimeSet.{name}({inner})"

    def __str__(self) -> str:
        body = "{" + ", ".join(str(p) for p in sorted(self.primes)) + "}"
        if self.is_finite:
            return body
        if not self.primes:
            return "all primes"
        return f"all primes except {body}"


def primeset_of(primes: Iterable[int]) -> PrimeSet:
    """Finite PrimeSet from any iterable of primes."""
    return PrimeSet(True, frozenset(primes))
