"""Exact alternating binomial sums: factorials, finite differences,
Stirling numbers, word counts, and sums of two squares."""

from .differences import (
    PolySpec,
    Sequence,
    first_difference,
    is_constant_prefix,
    nth_difference,
    nth_difference_direct,
    polynomial_sequence,
    power_sequence_difference,
)
from .errors import (
    FactsumsError,
    InternalInvariantError,
    InvalidArgument,
    NoInverseError,
    ResourceBoundError,
)
from .exact_core import alt_binom_sum, binomial, factorial, mod_inverse, mod_pow
from .identities import (
    IdentityReport,
    factorial_sum,
    factorial_sum_shift,
    factorial_sum_shift1,
    harmonic_alternating,
    harmonic_number,
    reciprocal_shift_sum,
    telescoping_check,
)
from .stirling import (
    Composition,
    arrangement_count,
    coefficient_C,
    compositions_nondecreasing,
    power_sum,
    stirling2_explicit,
    stirling2_partitions,
    stirling2_recurrence,
    stirling2_shifted,
    surjection_count,
)
from .two_squares import (
    TwoSquares,
    WitnessPair,
    decompose_brute,
    decompose_prime,
    is_prime,
    sqrt_minus_one,
    witness_pair,
)
from .words import (
    exact_letter_census,
    overcount_check,
    repeated_letter_count_enumerate,
    repeated_letter_count_formula,
)

__version__ = "0.1.0"
