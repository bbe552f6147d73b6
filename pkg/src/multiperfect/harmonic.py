"""Harmonic numbers, exact and asymptotic, and the multiperfect threshold table.

Two evaluation routes are kept deliberately separate:

* ``harmonic_exact`` sums 1/i as an exact rational (binary splitting, GMP
  integers when gmpy2 is importable), capped at 10**6 where the numerators
  reach ~half a million digits.

* ``harmonic_approx`` evaluates the asymptotic expansion
  ``ln t + gamma + 1/(2t) - 1/(12 t^2) + 1/(120 t^4)`` and attaches a
  certified absolute error bound.  The truncation part of the bound is the
  first omitted term 1/(252 t^6) (the expansion brackets the true value),
  the rounding part is 4*eps*max(ln t, 1).

``certified_compare`` combines the two routes (plus a tighter compensated
float evaluation for arguments past the exact cap) to decide H_t <=> k with
a proof-grade error interval, which is what the screening threshold
``min_tau_for_k`` and the bound table are built on.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

try:
    import gmpy2
    from gmpy2 import mpz

    _HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    gmpy2 = None
    mpz = int
    _HAVE_GMPY2 = False

__all__ = [
    "EULER_MASCHERONI",
    "EULER_MASCHERONI_DIGITS",
    "EULER_MASCHERONI_FRACTION",
    "EXACT_LIMIT",
    "MAX_CERTIFIED_K",
    "HarmonicApprox",
    "BoundTableRow",
    "UnsupportedRangeError",
    "CertificationError",
    "harmonic_exact",
    "harmonic_exact_iter",
    "harmonic_approx",
    "epsilon_residual",
    "exp_lower_bound",
    "min_tau_for_k",
    "bound_table",
    "certified_compare",
    "check_lemma1",
    "check_lemma2",
    "check_reciprocal_domination",
]

# Euler-Mascheroni constant, 50 decimal places (OEIS A001620).
EULER_MASCHERONI_DIGITS = "0.57721566490153286060651209008240243104215933593992"
EULER_MASCHERONI = float(EULER_MASCHERONI_DIGITS)
EULER_MASCHERONI_FRACTION = Fraction(EULER_MASCHERONI_DIGITS)

# second double of gamma, for the compensated evaluation path
_GAMMA_LO = float(EULER_MASCHERONI_FRACTION - Fraction(EULER_MASCHERONI))

_EPS = sys.float_info.epsilon

# Exact rational harmonic numbers are capped here; the reduced numerator at
# the cap has ~434000 digits.
EXACT_LIMIT = 10**6

# Largest multiplier k whose threshold scan float64 can still certify; at
# k = 30 the winning margin is ~2e-14 against a ~1e-14 evaluation error.
MAX_CERTIFIED_K = 30


class UnsupportedRangeError(ValueError):
    """Argument falls outside the range the precision budget certifies."""


class CertificationError(ArithmeticError):
    """The error interval could not separate two quantities being compared."""


@dataclass(frozen=True)
class HarmonicApprox:
    """A float harmonic value plus a certified absolute error bound:
    |value - H_index| <= error_bound."""

    index: int
    value: float
    error_bound: float


@dataclass(frozen=True)
class BoundTableRow:
    """One row of the threshold table: the exponential bound e^(k - gamma)
    and the least divisor count whose harmonic number exceeds k."""

    k: int
    exp_bound: float
    min_tau: int


# ---------------------------------------------------------------------------
# exact route


def _hsplit(a: int, b: int) -> tuple:
    # sum_{i=a}^{b} 1/i as an unreduced (num, den) pair, binary splitting
    if b - a < 8:
        num, den = 0, 1
        for i in range(a, b + 1):
            num = num * i + den
            den *= i
        return mpz(num), mpz(den)
    mid = (a + b) // 2
    n1, d1 = _hsplit(a, mid)
    n2, d2 = _hsplit(mid + 1, b)
    return n1 * d2 + n2 * d1, d1 * d2


@lru_cache(maxsize=64)
def _harmonic_pair(t: int) -> tuple[int, int]:
    # reduced (numerator, denominator) of H_t as plain ints
    num, den = _hsplit(1, t)
    g = gmpy2.gcd(num, den) if _HAVE_GMPY2 else math.gcd(num, den)
    return int(num // g), int(den // g)


def _fraction_from_coprime(num: int, den: int) -> Fraction:
    # bypass Fraction's gcd; at t = 10**6 that gcd alone costs seconds
    f = Fraction.__new__(Fraction)
    try:
        f._numerator = num
        f._denominator = den
    except AttributeError:  # pragma: no cover - future-proofing
        return Fraction(num, den)
    return f


def _validate_index(t, cap: int | None = None) -> None:
    if not isinstance(t, int) or isinstance(t, bool):
        raise ValueError("index must be an int")
    if t < 1:
        raise ValueError("harmonic numbers need an index >= 1")
    if cap is not None and t > cap:
        raise ValueError(f"index {t} exceeds the exact-mode cap {cap}")


def harmonic_exact(t: int) -> Fraction:
    """H_t = sum of 1/i for i = 1..t, exact and in lowest terms (t <= 10**6)."""
    _validate_index(t, EXACT_LIMIT)
    return _fraction_from_coprime(*_harmonic_pair(t))


def harmonic_exact_iter(t_max: int):
    """Yield (t, H_t) for t = 1..t_max with an incremental running sum.

    This is the cheap way to sweep a contiguous range; it deliberately does
    not share code with harmonic_exact so the two can cross-check each other.
    Practical up to a few 10**4 (the running denominator grows with lcm(1..t)).
    """
    _validate_index(t_max, EXACT_LIMIT)
    h = Fraction(0)
    for t in range(1, t_max + 1):
        h += Fraction(1, t)
        yield t, h


def _harmonic_float(t: int) -> float:
    # H_t as a correctly rounded double (error <= 0.5 ulp)
    num, den = _harmonic_pair(t)
    return num / den


# ---------------------------------------------------------------------------
# asymptotic route


def harmonic_approx(t: int) -> HarmonicApprox:
    """Asymptotic harmonic value with a certified absolute error bound.

    value = ln t + gamma + 1/(2t) - 1/(12 t^2) + 1/(120 t^4)
    error_bound = 1/(252 t^6) + 4*eps*max(ln t, 1)

    The bound is honest for every t >= 1 (at t = 1 the series itself is off
    by ~2.2e-3 and the bound says ~4e-3); by t = 10**6 it is below 1.3e-14.
    """
    _validate_index(t)
    ft = float(t)
    log_t = math.log(t)
    value = (
        log_t
        + EULER_MASCHERONI
        + 1.0 / (2.0 * ft)
        - 1.0 / (12.0 * ft * ft)
        + 1.0 / (120.0 * ft**4)
    )
    error_bound = 1.0 / (252.0 * ft**6) + 4.0 * _EPS * max(log_t, 1.0)
    return HarmonicApprox(t, value, error_bound)


def _harmonic_tight(t: int) -> tuple[float, float]:
    # Compensated evaluation for t past the exact cap: exactly rounded
    # summation plus a double-double gamma.  Error sources: libm log
    # (<= 1 ulp <= 2*eps*ln t), fsum's final rounding (<= eps*value), and
    # the bracketing term 1/(252 t^6); everything else is far below 1e-20.
    ft = float(t)
    value = math.fsum(
        [
            math.log(t),
            EULER_MASCHERONI,
            _GAMMA_LO,
            1.0 / (2.0 * ft),
            -1.0 / (12.0 * ft * ft),
            1.0 / (120.0 * ft**4),
        ]
    )
    bound = 3.0 * _EPS * max(value, 1.0) + 1.0 / (252.0 * ft**6)
    return value, bound


def epsilon_residual(t: int) -> float:
    """The residual H_t - ln t - gamma (exact H_t; t <= 10**6).

    Strictly positive, strictly decreasing, asymptotically 1/(2t).
    """
    _validate_index(t, EXACT_LIMIT)
    return _residual_from_float(_harmonic_float(t), t)


def _residual_from_float(h_value: float, t: int) -> float:
    # shared with the bulk sweep in tests/CLI; h_value must carry H_t to
    # double precision, so the residual is good to ~6e-15 absolute
    return h_value - math.log(t) - EULER_MASCHERONI


# ---------------------------------------------------------------------------
# the threshold machinery


def _validate_k(k, lo: int = 1) -> None:
    if not isinstance(k, int) or isinstance(k, bool):
        raise ValueError("k must be an int")
    if k < lo or k > MAX_CERTIFIED_K:
        raise UnsupportedRangeError(
            f"k={k} outside the certified range {lo}..{MAX_CERTIFIED_K}"
        )


def exp_lower_bound(k: int) -> float:
    """The exponential threshold e^(k - gamma) for 1 <= k <= 30.

    Relative error is a few ulp (<= 1e-14 with lots of room): gamma is
    correctly rounded and libm exp is within 1 ulp.
    """
    _validate_k(k)
    return math.exp(k - EULER_MASCHERONI)


def certified_compare(t: int, threshold: int) -> tuple[int, HarmonicApprox]:
    """Decide H_t < threshold (-1), = (0), or > (+1), with proof.

    Returns the decision together with the (value, error_bound) pair that
    justifies it.  Tries the asymptotic bound first, falls back to exact
    rationals for t <= 10**6, then to a tighter compensated evaluation;
    raises CertificationError when nothing separates the two quantities.
    """
    _validate_index(t)
    approx = harmonic_approx(t)
    # compare via value - threshold: near the integer this subtraction is
    # exact (Sterbenz), so a 1e-14 margin is not flattened by ulp(threshold)
    diff = approx.value - threshold
    if diff > approx.error_bound:
        return 1, approx
    if -diff > approx.error_bound:
        return -1, approx
    if t <= EXACT_LIMIT:
        num, den = _harmonic_pair(t)
        value = num / den
        reported = HarmonicApprox(t, value, _EPS * max(abs(value), 1.0))
        exact_diff = num - threshold * den
        if exact_diff == 0:
            return 0, HarmonicApprox(t, value, 0.0)
        cmp = 1 if exact_diff > 0 else -1
        # the reported float pair must itself witness the decision
        if cmp * (value - threshold) <= reported.error_bound:
            raise CertificationError(
                f"H_{t} is too close to {threshold} to report in float64"
            )
        return cmp, reported
    value, bound = _harmonic_tight(t)
    tight = HarmonicApprox(t, value, bound)
    diff = value - threshold
    if diff > bound:
        return 1, tight
    if -diff > bound:
        return -1, tight
    raise CertificationError(
        f"cannot separate H_{t} from {threshold}: value={value!r} bound={bound!r}"
    )


@lru_cache(maxsize=None)
def min_tau_for_k(k: int) -> int:
    """Least t with H_t > k, for 2 <= k <= 30.

    Seeds at floor(e^(k - gamma)) and scans +-2 around it with certified
    comparisons.  H_t = k exactly cannot happen for t > 1, so the answer is
    well defined; a non-separating error bound raises CertificationError
    rather than guessing.

    (k = 1 is excluded: H_1 = 1 is not strictly greater than 1, so the
    strict criterion gives 2, which disagrees with the traditional table
    row; see bound_table(include_k1=True).)
    """
    _validate_k(k, lo=2)
    seed = math.floor(exp_lower_bound(k))
    lo = max(seed - 2, 2)
    decisions = [(t, certified_compare(t, k)[0]) for t in range(lo, seed + 3)]
    answer = None
    for (t, cmp), (_, prev_cmp) in zip(decisions[1:], decisions[:-1]):
        if prev_cmp < 0 and cmp > 0:
            answer = t
            break
        if prev_cmp > cmp:
            raise CertificationError(f"non-monotone scan around k={k}")
    if answer is None:
        raise CertificationError(f"scan window around floor(e^(k-gamma)) missed k={k}")
    return answer


def bound_table(k_max: int, include_k1: bool = False) -> list[BoundTableRow]:
    """Threshold rows (k, e^(k - gamma), min tau) for k = 2..k_max.

    With include_k1 a row (1, e^(1 - gamma), 2) is prepended; 2 is what the
    strict criterion H_t > 1 yields even though the traditional table prints
    1 there.  Each row is checked against the window invariant
    |min_tau - floor(exp_bound)| <= 2.
    """
    _validate_k(k_max)
    rows = []
    if include_k1:
        rows.append(BoundTableRow(1, exp_lower_bound(1), 2))
    for k in range(2, k_max + 1):
        exp_bound = exp_lower_bound(k)
        min_tau = min_tau_for_k(k)
        if abs(min_tau - math.floor(exp_bound)) > 2:
            raise CertificationError(
                f"table row k={k} violates the seed-window invariant"
            )
        rows.append(BoundTableRow(k, exp_bound, min_tau))
    return rows


# ---------------------------------------------------------------------------
# inequality checks


_LEMMA_EXACT_LIMIT = 1000

# rational upper envelope of e, used by the monotone-sequence comparisons
E_UPPER = Fraction(271828182845904524, 10**17)


def _lemma1_exact(k: int) -> bool:
    left = (1 + Fraction(1, k * (k + 2))) ** k
    mid = 1 + Fraction(1, k + 1)
    right = (1 + Fraction(1, k * (k + 1))) ** k
    return left <= mid <= right


def _lemma1_guarded_float(k: int) -> bool | None:
    # compare in log space; margins are ~1/k^2 against errors of a few
    # eps/k, so this certifies for every k up to ~1e14
    left = k * math.log1p(1.0 / (k * (k + 2)))
    mid = math.log1p(1.0 / (k + 1))
    right = k * math.log1p(1.0 / (k * (k + 1)))
    tol = 4.0 * _EPS
    lo_ok = left + tol * abs(left) < mid - tol * abs(mid)
    lo_bad = left - tol * abs(left) > mid + tol * abs(mid)
    hi_ok = mid + tol * abs(mid) < right - tol * abs(right)
    hi_bad = mid - tol * abs(mid) > right + tol * abs(right)
    if (lo_ok or lo_bad) and (hi_ok or hi_bad):
        return lo_ok and hi_ok
    return None  # inconclusive, caller falls back to exact rationals


def check_lemma1(k: int) -> bool:
    """Check (1 + 1/(k(k+2)))^k <= 1 + 1/(k+1) <= (1 + 1/(k(k+1)))^k.

    Exact rational arithmetic for k <= 1000, guarded floats above (falling
    back to rationals when the guard is inconclusive).
    """
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise ValueError("k must be a positive int")
    if k <= _LEMMA_EXACT_LIMIT:
        return _lemma1_exact(k)
    verdict = _lemma1_guarded_float(k)
    if verdict is None:
        return _lemma1_exact(k)
    return verdict


def check_lemma2(t: int, h_exact: Fraction | None = None) -> bool:
    """Check H_t - 1 < ln t < H_t with exact H_t and an interval guard on ln.

    t = 1 is rejected (the left side degenerates to 0 < 0).  h_exact lets a
    bulk sweep pass a precomputed running sum instead of re-deriving H_t.
    """
    _validate_index(t, EXACT_LIMIT)
    if t < 2:
        raise ValueError("t must be >= 2")
    h = harmonic_exact(t) if h_exact is None else h_exact
    log_t = math.log(t)
    pad = Fraction(2 * math.ulp(log_t))
    log_lo = Fraction(log_t) - pad
    log_hi = Fraction(log_t) + pad
    return h - 1 < log_lo and log_hi < h


def check_reciprocal_domination(seq) -> bool:
    """Check sum(1/k_i) <= H_n for a strictly increasing positive sequence
    of length n, in exact rational arithmetic."""
    seq = list(seq)
    if not seq:
        raise ValueError("sequence must be nonempty")
    prev = 0
    for v in seq:
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise ValueError("sequence entries must be positive ints")
        if v <= prev:
            raise ValueError("sequence must be strictly increasing")
        prev = v
    total = sum(Fraction(1, v) for v in seq)
    return total <= harmonic_exact(len(seq))
