"""Bulk sigma/tau over an interval and the multiperfect census.

The sieve reconstructs both multiplicative functions per segment from
prime-power parts: for each prime p up to sqrt(hi) it finds the exact
exponent of p in every n of the segment (one strided pass per power of p,
so the total work per segment is ~ size * sum 1/p), multiplies the
contribution (p^(e+1) - 1)/(p - 1) into sigma and (e + 1) into tau, and
divides the p-part out of a residue array.  Whatever residue exceeds 1 at
the end is a single leftover prime.  Everything stays in int64: below the
10**9 ceiling, sigma(n) < 6e9 and the largest intermediate product is
p * p^e <= sqrt(hi) * hi < 2^63.

Segments are independent work units; results do not depend on the segment
size, and report aggregation is a plain set union.
"""

from __future__ import annotations

import csv
import math
import time
from dataclasses import dataclass

import numpy as np

from .harmonic import min_tau_for_k

__all__ = [
    "SieveReport",
    "sieve_sigma_tau",
    "find_multiperfect",
    "validate_bound",
    "dump_census_csv",
    "DEFAULT_SEGMENT_SIZE",
    "MAX_LIMIT",
]

DEFAULT_SEGMENT_SIZE = 1 << 20  # ~8 MB of live arrays per segment
MAX_LIMIT = 10**9


@dataclass
class SieveReport:
    """Census outcome: every (n, k, tau) with sigma(n) = k*n found below
    `limit`, plus the entries (n >= 3) whose tau falls under the certified
    threshold for their k -- a list the screening bound predicts is empty."""

    limit: int
    found: list[tuple[int, int, int]]
    violations: list[tuple[int, int, int]]
    elapsed: float
    throughput: float


_prime_cache = np.empty(0, dtype=np.int64)
_prime_cache_limit = 1


def _primes_upto(limit: int) -> np.ndarray:
    # grow-once cache; the sieve only ever needs primes up to sqrt(10**9)
    global _prime_cache, _prime_cache_limit
    if limit > _prime_cache_limit:
        flags = np.ones(limit + 1, dtype=bool)
        flags[:2] = False
        for p in range(2, math.isqrt(limit) + 1):
            if flags[p]:
                flags[p * p :: p] = False
        _prime_cache = np.flatnonzero(flags).astype(np.int64)
        _prime_cache_limit = limit
    cut = np.searchsorted(_prime_cache, limit, side="right")
    return _prime_cache[:cut]


def _check_range(lo: int, hi: int) -> None:
    if not (isinstance(lo, int) and isinstance(hi, int)):
        raise ValueError("bounds must be ints")
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    if hi > MAX_LIMIT:
        raise ValueError(f"upper bound {hi} exceeds the supported ceiling {MAX_LIMIT}")


def _segment_sigma_tau(lo: int, hi: int) -> tuple[np.ndarray, np.ndarray]:
    # [lo, hi] inclusive; caller has validated the range
    m = hi - lo + 1
    rem = np.arange(lo, hi + 1, dtype=np.int64)
    sig = np.ones(m, dtype=np.int64)
    tau = np.ones(m, dtype=np.int64)
    for p in _primes_upto(math.isqrt(hi)):
        p = int(p)
        first = ((lo + p - 1) // p) * p
        if first > hi:
            continue
        i0 = first - lo
        idx = np.arange(i0, m, p)
        e = np.ones(idx.size, dtype=np.int64)
        q = p * p
        while q <= hi:
            first_q = ((lo + q - 1) // q) * q
            if first_q > hi:
                break
            # positions of multiples of q inside idx
            e[(np.arange(first_q - lo, m, q) - i0) // p] += 1
            q *= p
        pe = p**e
        sig[idx] *= (pe * p - 1) // (p - 1)
        tau[idx] *= e + 1
        rem[idx] //= pe
    leftover = rem > 1
    sig[leftover] *= rem[leftover] + 1
    tau[leftover] *= 2
    return sig, tau


def sieve_sigma_tau(
    lo: int, hi: int, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> tuple[np.ndarray, np.ndarray]:
    """Exact sigma(n) and tau(n) for every n in [lo, hi], as int64 arrays.

    The span must fit in one segment (hi - lo < segment_size); the census
    functions below drive this over longer ranges.
    """
    _check_range(lo, hi)
    if hi - lo + 1 > segment_size:
        raise ValueError(
            f"span {hi - lo + 1} exceeds the segment size {segment_size}"
        )
    return _segment_sigma_tau(lo, hi)


def find_multiperfect(
    limit: int, min_k: int = 2, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> SieveReport:
    """All n <= limit with sigma(n) = k*n for some integer k >= min_k.

    Runs the segmented sieve over [1, limit] and reports (n, k, tau(n))
    triples sorted by n, plus any threshold violations (none are expected).
    """
    _check_range(1, limit)
    if min_k < 1:
        raise ValueError("min_k must be >= 1")
    if segment_size < 1:
        raise ValueError("segment_size must be >= 1")
    start = time.monotonic()
    found: list[tuple[int, int, int]] = []
    lo = 1
    while lo <= limit:
        hi = min(lo + segment_size - 1, limit)
        sig, tau = _segment_sigma_tau(lo, hi)
        n = np.arange(lo, hi + 1, dtype=np.int64)
        hits = np.flatnonzero(sig % n == 0)
        for i in hits:
            k = int(sig[i] // n[i])
            if k >= min_k:
                found.append((int(n[i]), k, int(tau[i])))
        lo = hi + 1
    elapsed = time.monotonic() - start
    violations = [
        (n_, k_, t_) for n_, k_, t_ in found if n_ >= 3 and t_ < min_tau_for_k(k_)
    ]
    throughput = limit / elapsed if elapsed > 0 else float("inf")
    return SieveReport(limit, found, violations, elapsed, throughput)


def validate_bound(
    limit: int, segment_size: int = DEFAULT_SEGMENT_SIZE
) -> SieveReport:
    """Empirically check the threshold over every multiperfect n <= limit:
    the returned report's `violations` list is empty iff tau(n) clears
    min_tau_for_k(k) for every found (n, k) with n >= 3."""
    return find_multiperfect(limit, min_k=2, segment_size=segment_size)


def dump_census_csv(report: SieveReport, path: str) -> None:
    """Write the report's (n, k, tau) triples to a CSV file."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "k", "tau"])
        writer.writerows(report.found)
