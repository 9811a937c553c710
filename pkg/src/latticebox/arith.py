"""Exact integer and rational primitives.

Sign-correct floor/ceiling division, trial-division factorization for
desk-scale integers, and membership tests for rings of rationals whose
reduced denominators factor over a fixed finite set of primes.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import ResourceLimitError

# Trial division is the documented factorization method; past this limit it
# would need sqrt(n) > 10^6 divisions per call.
FACTOR_LIMIT = 10**12


def floor_div(a: int, m: int) -> int:
    """Greatest integer <= a/m, for either sign of m (never truncation)."""
    if m == 0:
        raise ZeroDivisionError("floor_div: zero divisor")
    # Python's // already rounds toward -inf for any sign combination.
    return a // m


def ceil_div(a: int, m: int) -> int:
    """Least integer >= a/m; satisfies ceil_div(a, m) == -floor_div(-a, m)."""
    if m == 0:
        raise ZeroDivisionError("ceil_div: zero divisor")
    return -((-a) // m)


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    top = isqrt(n)
    while f <= top:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return n > 1


def factorize(n: int) -> list[int]:
    """Prime factors of |n| with multiplicity, ascending.

    factorize(1) == [] and the product of the result is always |n|.
    Rejects n == 0 and |n| beyond FACTOR_LIMIT.
    """
    if n == 0:
        raise ValueError("factorize: zero has no factorization")
    n = abs(n)
    if n > FACTOR_LIMIT:
        raise ResourceLimitError(f"factorize: |n| exceeds {FACTOR_LIMIT}")
    out: list[int] = []
    for p in (2, 3):
        while n % p == 0:
            out.append(p)
            n //= p
    f = 5
    while f * f <= n:
        for p in (f, f + 2):
            while n % p == 0:
                out.append(p)
                n //= p
        f += 6
    if n > 1:
        out.append(n)
    return out


class PrimeSet:
    """Immutable ascending set of primes (allowed denominator factors)."""

    __slots__ = ("primes",)

    def __init__(self, primes=()):
        seen = sorted({int(p) for p in primes})
        for p in seen:
            if not is_prime(p):
                raise ValueError(f"PrimeSet: {p} is not prime")
        self.primes: tuple[int, ...] = tuple(seen)

    def __contains__(self, p) -> bool:
        return p in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self) -> int:
        return len(self.primes)

    def __bool__(self) -> bool:
        return bool(self.primes)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeSet) and self.primes == other.primes

    def __hash__(self) -> int:
        return hash(("PrimeSet", self.primes))

    def __repr__(self) -> str:
        return f"PrimeSet({list(self.primes)!r})"

    def union(self, other: "PrimeSet") -> "PrimeSet":
        return PrimeSet(self.primes + tuple(other))

    def issuperset(self, other: "PrimeSet") -> bool:
        return set(other.primes) <= set(self.primes)

    @property
    def smallest(self) -> int:
        if not self.primes:
            raise ValueError("PrimeSet is empty")
        return self.primes[0]


def in_qp(x, primes: PrimeSet) -> bool:
    """True iff every prime factor of the reduced denominator lies in primes.

    Integers always qualify; with an empty prime set the ring is the integers.
    """
    den = Fraction(x).denominator
    for p in primes:
        while den % p == 0:
            den //= p
    return den == 1


def p_part(x, primes: PrimeSet) -> tuple[int, int]:
    """Split the reduced denominator of x as (smooth, coprime).

    smooth carries exactly the prime factors from `primes`, coprime the rest;
    their product is the denominator. Integers give (1, 1).
    """
    den = Fraction(x).denominator
    smooth = 1
    for p in primes:
        while den % p == 0:
            den //= p
            smooth *= p
    return smooth, den


def parse_rational(value) -> Fraction:
    """Parse a JSON-style number: int, "p", or "p/q" (exact, reduced)."""
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not a rational: {value!r}")


def format_rational(x) -> str:
    """Render reduced "p/q", or plain "p" when the denominator is 1."""
    f = Fraction(x)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def parse_int(value) -> int:
    """Parse a JSON-style integer: int or decimal string."""
    if isinstance(value, bool):
        raise ValueError(f"not an integer: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        return int(value.strip())
    raise ValueError(f"not an integer: {value!r}")
