"""Divisor-count screening for k-multiperfect numbers.

A number n with sigma(n) = k*n has abundancy k expressible as a sum of
tau(n) distinct unit fractions, so k <= H_tau(n) and, dropping the residual,
e^(k - gamma) < tau(n).  This package turns that observation into an
executable screen: exact divisor arithmetic, certified harmonic evaluation,
the threshold table, and a segmented census sieve.
"""

from .divisor import (
    ABUNDANT,
    DEFICIENT,
    PERFECT,
    Classification,
    Factorization,
    abundancy,
    classify,
    divisors,
    factorize,
    is_prime,
    sigma,
    tau,
)
from .harmonic import (
    EULER_MASCHERONI,
    EULER_MASCHERONI_DIGITS,
    EULER_MASCHERONI_FRACTION,
    EXACT_LIMIT,
    MAX_CERTIFIED_K,
    BoundTableRow,
    CertificationError,
    HarmonicApprox,
    UnsupportedRangeError,
    bound_table,
    certified_compare,
    check_lemma1,
    check_lemma2,
    check_reciprocal_domination,
    epsilon_residual,
    exp_lower_bound,
    harmonic_approx,
    harmonic_exact,
    harmonic_exact_iter,
    min_tau_for_k,
)
from .screener import (
    CONFIRMED_MULTIPERFECT,
    POSSIBLE,
    RULED_OUT,
    ScreenVerdict,
    screen_by_tau,
    screen_number,
    verify_multiperfect,
)
from .sieve import (
    DEFAULT_SEGMENT_SIZE,
    SieveReport,
    dump_census_csv,
    find_multiperfect,
    sieve_sigma_tau,
    validate_bound,
)

__version__ = "0.1.0"
