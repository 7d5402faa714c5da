"""Integer factorization and divisor-lattice arithmetic.

Divisors are handled as exponent vectors aligned to a reference
factorization, so ``(1, 0)`` over ``12 = 2^2 * 3`` stands for 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import isqrt, prod

MAX_INPUT = 2**63 - 1

ExponentVector = tuple[int, ...]


def is_prime(u: int) -> bool:
    if u < 2:
        return False
    if u < 4:
        return True
    if u % 2 == 0 or u % 3 == 0:
        return False
    k = 5
    while k * k <= u:
        if u % k == 0 or u % (k + 2) == 0:
            return False
        k += 6
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime-exponent pairs of an integer >= 2, primes strictly increasing."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("a factorization needs at least one prime")
        last = 1
        for p, e in self.pairs:
            if p <= last or not is_prime(p):
                raise ValueError(f"bad prime {p} in factorization")
            if e < 1:
                raise ValueError(f"exponent of {p} must be positive")
            last = p

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)

    @property
    def exponents(self) -> ExponentVector:
        return tuple(e for _, e in self.pairs)

    @property
    def value(self) -> int:
        return prod(p**e for p, e in self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.pairs)

    def radical(self) -> int:
        """Product of the distinct primes (squarefree kernel)."""
        return prod(self.primes)

    def align(self, u: int) -> ExponentVector:
        """Exponent vector of ``u`` over these primes.

        Raises ValueError if ``u`` has a prime factor outside this list.
        """
        if u < 1:
            raise ValueError("only positive integers can be aligned")
        exps = []
        for p in self.primes:
            e = 0
            while u % p == 0:
                u //= p
                e += 1
            exps.append(e)
        if u != 1:
            raise ValueError(f"leftover cofactor {u} not supported by {self.primes}")
        return tuple(exps)

    def value_of(self, r: ExponentVector) -> int:
        if len(r) != len(self.pairs):
            raise ValueError("exponent vector length does not match factorization")
        return prod(p**k for p, k in zip(self.primes, r))


def factorize(u: int) -> Factorization:
    """Factor ``u`` by trial division (fine for the desk-scale inputs used here)."""
    if u < 2:
        raise ValueError(f"cannot factor {u}: need u >= 2")
    if u > MAX_INPUT:
        raise ValueError(f"{u} exceeds the 64-bit input range")
    pairs = []
    for p in (2, 3):
        if u % p == 0:
            e = 0
            while u % p == 0:
                u //= p
                e += 1
            pairs.append((p, e))
    k = 5
    while k * k <= u:
        for p in (k, k + 2):
            if u % p == 0:
                e = 0
                while u % p == 0:
                    u //= p
                    e += 1
                pairs.append((p, e))
        k += 6
    if u > 1:
        pairs.append((u, 1))
    return Factorization(tuple(pairs))


def divisors(f: Factorization) -> list[ExponentVector]:
    """All divisor exponent vectors of ``f`` in lexicographic order."""
    return list(product(*(range(e + 1) for e in f.exponents)))


def divisor_count(f: Factorization) -> int:
    return prod(e + 1 for e in f.exponents)


def lcm_exponents(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    if len(a) != len(b):
        raise ValueError(f"mismatched exponent vectors {a} and {b}")
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd_exponents(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    if len(a) != len(b):
        raise ValueError(f"mismatched exponent vectors {a} and {b}")
    return tuple(min(x, y) for x, y in zip(a, b))


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """True iff the divisor with vector ``a`` divides the one with ``b``."""
    return all(x <= y for x, y in zip(a, b))


def coprime_splittings(f: Factorization) -> list[tuple[int, int]]:
    """Every unordered factorization value = a*b with gcd(a, b) = 1 and a, b >= 2."""
    parts = [p**e for p, e in f.pairs]
    out = []
    # fix the first prime power on the 'a' side to avoid listing (a, b) and (b, a)
    for mask in range(0, 1 << (len(parts) - 1)):
        a = parts[0]
        b = 1
        for i, q in enumerate(parts[1:]):
            if mask >> i & 1:
                a *= q
            else:
                b *= q
        if b >= 2:
            out.append((a, b))
    return out
