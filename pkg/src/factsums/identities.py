"""Alternating binomial sums with closed forms: factorials, harmonic
numbers and reciprocal shifts.

Each evaluator returns the summed side only. The ``report_*`` helpers pair
it with the closed form in an :class:`IdentityReport`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .errors import InvalidArgument
from .exact_core import (
    Number,
    alt_binom_sum,
    binomial,
    factorial,
    normalize,
    to_rational,
)


@dataclass(frozen=True)
class IdentityReport:
    name: str
    parameters: Tuple[Tuple[str, Number], ...]
    lhs: Number
    rhs: Number
    holds: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "holds", self.lhs == self.rhs)


def _require_positive(name: str, value: int) -> None:
    if value < 1:
        raise InvalidArgument(f"{name} must be >= 1, got {value}")


def factorial_sum(n: int) -> int:
    """``sum((-1)**(n-i) * C(n,i) * i**n)``, which equals ``n!``."""
    _require_positive("n", n)
    return alt_binom_sum(n, lambda i: i**n)


def factorial_sum_shift1(n: int) -> int:
    """Same sum with ``(i+1)**n`` in place of ``i**n``; also ``n!``."""
    _require_positive("n", n)
    return alt_binom_sum(n, lambda i: (i + 1) ** n)


def telescoping_check(n: int) -> int:
    """``sum((-1)**(n-i) * C(n,i) * ((i+1)**n - i**n))``, which is 0."""
    _require_positive("n", n)
    return alt_binom_sum(n, lambda i: (i + 1) ** n - i**n)


def factorial_sum_shift(n: int, k: Number | str) -> Number:
    """``sum((-1)**(n-i) * C(n,i) * (i+k)**n)`` for rational ``k``.

    The result is ``n!`` for every shift; powers of the rational ``i + k``
    are taken exactly.
    """
    _require_positive("n", n)
    k = to_rational(k)
    return alt_binom_sum(n, lambda i: (i + k) ** n)


def harmonic_number(n: int) -> Fraction:
    _require_positive("n", n)
    return sum((Fraction(1, i) for i in range(1, n + 1)), Fraction(0))


def harmonic_alternating(n: int) -> Number:
    """``sum((-1)**(n-i) * C(n,i) / i for i in 1..n)``.

    The ``i = 0`` term is undefined and is not part of the sum.
    """
    _require_positive("n", n)
    total = Fraction(0)
    for i in range(1, n + 1):
        sign = 1 if (n - i) % 2 == 0 else -1
        total += Fraction(sign * binomial(n, i), i)
    return normalize(total)


def reciprocal_shift_sum(n: int, k: int) -> Number:
    """``sum((-1)**(n-i) * C(n,i) / (i+k) for i in 0..n)`` for ``k >= 1``."""
    _require_positive("n", n)
    if k < 1:
        raise InvalidArgument(f"k must be >= 1 (i + k vanishes at i = 0), got {k}")
    return alt_binom_sum(n, lambda i: Fraction(1, i + k))


def reciprocal_shift_closed_form(n: int, k: int) -> Number:
    """``(-1)**n * n! * (k-1)! / (n+k)!``."""
    sign = -1 if n % 2 else 1
    return normalize(Fraction(sign * factorial(n) * factorial(k - 1), factorial(n + k)))


def report_factorial_sum(n: int) -> IdentityReport:
    return IdentityReport("factorial-sum", (("n", n),), factorial_sum(n), factorial(n))


def report_shift1(n: int) -> IdentityReport:
    return IdentityReport("shift1", (("n", n),), factorial_sum_shift1(n), factorial(n))


def report_shift(n: int, k: Number | str) -> IdentityReport:
    k = normalize(to_rational(k))
    return IdentityReport(
        "shift", (("n", n), ("k", k)), factorial_sum_shift(n, k), factorial(n)
    )


def report_telescope(n: int) -> IdentityReport:
    return IdentityReport("telescope", (("n", n),), telescoping_check(n), 0)


def report_harmonic(n: int) -> IdentityReport:
    sign = 1 if n % 2 else -1
    return IdentityReport(
        "harmonic",
        (("n", n),),
        harmonic_alternating(n),
        normalize(sign * harmonic_number(n)),
    )


def report_reciprocal(n: int, k: int) -> IdentityReport:
    return IdentityReport(
        "reciprocal",
        (("n", n), ("k", k)),
        reciprocal_shift_sum(n, k),
        reciprocal_shift_closed_form(n, k),
    )


DEFAULT_SHIFTS: List[Fraction] = [
    Fraction(s) for s in ("0", "1", "2", "7", "100", "1/2", "7/3", "-5/4")
]
