"""Exact divisor arithmetic: factorization, tau, sigma, abundancy, classification.

Everything here is exact integer / rational arithmetic on plain Python ints;
nothing rounds.  Factorization is deterministic for a given input (the rho
splitter seeds its generator from the number being factored).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "Factorization",
    "Classification",
    "DEFICIENT",
    "PERFECT",
    "ABUNDANT",
    "factorize",
    "tau",
    "sigma",
    "divisors",
    "abundancy",
    "classify",
    "is_prime",
    "MAX_ENUMERATED_DIVISORS",
]

DEFICIENT = "deficient"
PERFECT = "perfect"
ABUNDANT = "abundant"

# divisors() refuses to materialize more than this many values; tau/sigma
# work from the factorization and have no such cap.
MAX_ENUMERATED_DIVISORS = 10**7

_TRIAL_LIMIT = 4096


def _sieve_primes(limit: int) -> list[int]:
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * ((limit - p * p) // p + 1)
    return [i for i, flag in enumerate(sieve) if flag]


_TRIAL_PRIMES = _sieve_primes(_TRIAL_LIMIT)

# Strong-pseudoprime bases: the test below is deterministic for every
# n < 3_317_044_064_679_887_385_961_981 (comfortably past 2^64); beyond that
# it is a best-effort probabilistic answer.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test, deterministic below ~3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Canonical prime-power decomposition: value = prod(p**e for p, e in factors).

    factors is sorted by prime; value 1 has an empty factor list.  The
    invariants are checked on construction, so a Factorization instance can
    be trusted downstream.
    """

    factors: tuple[tuple[int, int], ...]
    value: int

    def __post_init__(self):
        if self.value < 1:
            raise ValueError("factorization value must be >= 1")
        prod = 1
        prev = 0
        for p, e in self.factors:
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if e < 1:
                raise ValueError("exponents must be positive")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prod *= p**e
            prev = p
        if prod != self.value:
            raise ValueError("factor product does not equal value")

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in self.factors)


@dataclass(frozen=True)
class Classification:
    """Deficient / perfect / abundant verdict, with the multiplier k when
    sigma(n) = k*n divides exactly (k=2 is the perfect case)."""

    kind: str
    multiperfect_k: int | None


def _pollard_brent(n: int, rng: random.Random) -> int:
    """Return a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            # backtrack one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
        # cycle found the trivial factor; retry with fresh parameters


def factorize(n: int) -> Factorization:
    """Canonical factorization of n >= 1.

    Trial division by primes up to 4096, then deterministic primality
    testing with a seeded Brent-rho splitter for whatever survives.
    Guaranteed for n <= 2^64; best-effort (but verified by the product
    invariant) above that.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("n must be an int")
    if n < 1:
        raise ValueError("divisor functions are undefined for n < 1")
    counts: dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1:
        if m <= _TRIAL_LIMIT * _TRIAL_LIMIT or is_prime(m):
            # cofactor below the trial square is automatically prime
            counts[m] = counts.get(m, 0) + 1
        else:
            rng = random.Random(n)  # per-call seed: deterministic splits
            stack = [m]
            while stack:
                v = stack.pop()
                if v == 1:
                    continue
                if is_prime(v):
                    counts[v] = counts.get(v, 0) + 1
                    continue
                d = _pollard_brent(v, rng)
                stack.append(d)
                stack.append(v // d)
    return Factorization(tuple(sorted(counts.items())), n)


def tau(f: Factorization) -> int:
    """Number of divisors: prod(e + 1)."""
    out = 1
    for _, e in f.factors:
        out *= e + 1
    return out


def sigma(f: Factorization) -> int:
    """Sum of all divisors: prod((p**(e+1) - 1) // (p - 1)), exact."""
    out = 1
    for p, e in f.factors:
        out *= (p ** (e + 1) - 1) // (p - 1)
    return out


def divisors(f: Factorization) -> list[int]:
    """All divisors of f.value in increasing order (len == tau(f)).

    Refuses when the divisor count exceeds MAX_ENUMERATED_DIVISORS to keep
    memory bounded.
    """
    count = tau(f)
    if count > MAX_ENUMERATED_DIVISORS:
        raise ValueError(
            f"refusing to enumerate {count} divisors "
            f"(cap {MAX_ENUMERATED_DIVISORS})"
        )
    divs = [1]
    for p, e in f.factors:
        pk = 1
        block = []
        for _ in range(e):
            pk *= p
            block.extend(d * pk for d in divs)
        divs.extend(block)
    divs.sort()
    return divs


def abundancy(n: int) -> Fraction:
    """Abundancy index sigma(n)/n as an exact Fraction in lowest terms.

    Equals the sum of reciprocals of the divisors of n.
    """
    f = factorize(n)
    return Fraction(sigma(f), n)


def classify(n: int) -> Classification:
    """Classify n as deficient / perfect / abundant; report k when
    sigma(n) = k*n exactly."""
    f = factorize(n)
    s = sigma(f)
    if s == 2 * n:
        kind = PERFECT
    elif s > 2 * n:
        kind = ABUNDANT
    else:
        kind = DEFICIENT
    k = s // n if s % n == 0 else None
    return Classification(kind, k)
