"""Counting length-n words over an n-letter alphabet.

The alphabet is always ``{0, ..., n-1}``; only counts are ever produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import List, Optional, Tuple

from .errors import InternalInvariantError, InvalidArgument, ResourceBoundError
from .exact_core import binomial, factorial
from .stirling import surjection_count

WORD_ENUMERATION_CAP = 7


@dataclass(frozen=True)
class WordCountReport:
    n: int
    formula_count: int
    total_words: int
    enumerated_count: Optional[int] = None

    @property
    def consistent(self) -> bool:
        if self.formula_count != self.total_words - factorial(self.n):
            return False
        return self.enumerated_count in (None, self.formula_count)


def repeated_letter_count_formula(n: int) -> int:
    """``-sum((-1)**(n-i) * C(n,i) * i**n for i in 1..n-1)``; equals ``n**n - n!``."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    total = 0
    for i in range(1, n):
        sign = 1 if (n - i) % 2 == 0 else -1
        total += sign * binomial(n, i) * i**n
    return -total


def repeated_letter_count_enumerate(n: int, cap: int = WORD_ENUMERATION_CAP) -> int:
    """Stream all ``n**n`` words and count those repeating some letter."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    if n > cap:
        raise ResourceBoundError(f"word enumeration limited to n <= {cap}, got n={n}")
    return sum(1 for word in product(range(n), repeat=n) if len(set(word)) < n)


def overcount_check(n: int, k: int) -> int:
    """``-sum((-1)**(n-i) * C(n-k, i-k) for i in k..n-1)``, always 1.

    How many times the inclusion-exclusion sum counts a word with exactly
    ``k`` distinct letters.
    """
    if not 1 <= k <= n - 1:
        raise InvalidArgument(f"need 1 <= k <= n-1, got n={n}, k={k}")
    total = 0
    for i in range(k, n):
        sign = 1 if (n - i) % 2 == 0 else -1
        total += sign * binomial(n - k, i - k)
    return -total


def exact_letter_census(n: int) -> List[Tuple[int, int]]:
    """``[(k, #words using exactly k distinct letters) for k in 1..n]``."""
    if not 1 <= n <= 30:
        raise InvalidArgument(f"census defined for 1 <= n <= 30, got n={n}")
    census = [(k, binomial(n, k) * surjection_count(n, k)) for k in range(1, n + 1)]
    if sum(count for _, count in census) != n**n:
        raise InternalInvariantError(f"census for n={n} does not sum to n**n")
    return census


def exact_letter_census_enumerate(
    n: int, cap: int = WORD_ENUMERATION_CAP
) -> List[Tuple[int, int]]:
    """Same census by brute force over all words."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    if n > cap:
        raise ResourceBoundError(f"word enumeration limited to n <= {cap}, got n={n}")
    counts = [0] * (n + 1)
    for word in product(range(n), repeat=n):
        counts[len(set(word))] += 1
    return [(k, counts[k]) for k in range(1, n + 1)]


def word_count_report(n: int, cap: int = WORD_ENUMERATION_CAP) -> WordCountReport:
    return WordCountReport(
        n=n,
        formula_count=repeated_letter_count_formula(n),
        total_words=n**n,
        enumerated_count=repeated_letter_count_enumerate(n, cap) if n <= cap else None,
    )
