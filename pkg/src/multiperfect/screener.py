"""Screening k-multiperfection by divisor count, plus the exact verifier.

The screen is a necessary condition only: k = sigma(n)/n is a sum of tau(n)
distinct unit fractions, so k <= H_tau(n); whenever the certified harmonic
value at tau(n) stays below k, n cannot be k-multiperfect.  A "possible"
verdict asserts nothing.

The decision is always the harmonic comparison H_tau > k, never the looser
exponential form e^(k - gamma) < tau (which over-excludes near the boundary:
tau(6) = 4 < e^(2 - gamma) ~ 4.1487, yet 6 is perfect).  The exponential
threshold is carried along in the verdict for reporting only.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisor import factorize, sigma, tau
from .harmonic import (
    HarmonicApprox,
    certified_compare,
    exp_lower_bound,
)

__all__ = [
    "RULED_OUT",
    "POSSIBLE",
    "CONFIRMED_MULTIPERFECT",
    "ScreenVerdict",
    "screen_by_tau",
    "screen_number",
    "verify_multiperfect",
]

RULED_OUT = "ruled_out"
POSSIBLE = "possible"
CONFIRMED_MULTIPERFECT = "confirmed_multiperfect"


@dataclass(frozen=True)
class ScreenVerdict:
    """Outcome of a screen, with the numeric certificate that justified it."""

    outcome: str
    k: int
    tau_value: int
    harmonic_at_tau: HarmonicApprox
    exp_bound: float


def screen_by_tau(tau_value: int, k: int) -> ScreenVerdict:
    """Screen from the divisor count alone.

    ruled_out iff the certified harmonic value at tau_value is below k
    (equivalently tau_value < min_tau_for_k(k)); possible otherwise.  Never
    confirms: no n is available at this level.
    """
    if not isinstance(tau_value, int) or isinstance(tau_value, bool) or tau_value < 1:
        raise ValueError("tau_value must be a positive int")
    exp_bound = exp_lower_bound(k)  # validates k
    cmp, certificate = certified_compare(tau_value, k)
    outcome = RULED_OUT if cmp < 0 else POSSIBLE
    return ScreenVerdict(outcome, k, tau_value, certificate, exp_bound)


def screen_number(n: int, k: int) -> ScreenVerdict:
    """Screen a concrete n: factorize, screen by tau(n), and when the screen
    leaves it possible, settle sigma(n) = k*n exactly."""
    f = factorize(n)
    verdict = screen_by_tau(tau(f), k)
    if verdict.outcome == POSSIBLE and sigma(f) == k * n:
        return ScreenVerdict(
            CONFIRMED_MULTIPERFECT,
            k,
            verdict.tau_value,
            verdict.harmonic_at_tau,
            verdict.exp_bound,
        )
    return verdict


def verify_multiperfect(n: int) -> int | None:
    """Return k when sigma(n) = k*n exactly, else None."""
    f = factorize(n)
    s = sigma(f)
    return s // n if s % n == 0 else None
