"""Forward differences of rational sequences.

A :class:`Sequence` wraps a pure rule ``k -> a_k``. Differencing builds new
sequences lazily; every sequence memoizes its own values, so the recursive
n-th difference evaluates each underlying term once instead of 2**n times.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List

from .errors import InvalidArgument
from .exact_core import Number, alt_binom_sum, normalize, to_rational

DEFAULT_PREFIX = 25


class Sequence:
    """Rational-valued sequence ``(a_k)_{k>=0}`` given by a generator rule."""

    def __init__(self, generator: Callable[[int], Number], description: str = ""):
        self.description = description
        # lru_cache is safe under concurrent callers and never changes values
        self._cached = lru_cache(maxsize=None)(generator)

    def __call__(self, k: int) -> Number:
        if k < 0:
            raise InvalidArgument(f"sequence index must be >= 0, got {k}")
        return normalize(self._cached(k))

    def terms(self, count: int, start: int = 0) -> List[Number]:
        return [self(k) for k in range(start, start + count)]

    def __add__(self, other: "Sequence") -> "Sequence":
        return Sequence(
            lambda k: self(k) + other(k),
            f"({self.description}) + ({other.description})",
        )

    def __repr__(self) -> str:
        return f"Sequence({self.description!r})"


def constant_sequence(value: Number) -> Sequence:
    return Sequence(lambda k: value, f"{value}")


@dataclass(frozen=True)
class PolySpec:
    """Polynomial by rational coefficients, constant term first.

    Trailing zero coefficients are dropped, so ``degree`` is exact; the zero
    polynomial is stored as ``(0,)`` and reports degree 0.
    """

    coefficients: tuple

    def __post_init__(self) -> None:
        coeffs = [to_rational(c) for c in self.coefficients] or [Fraction(0)]
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @classmethod
    def of(cls, *coefficients: Number | str) -> "PolySpec":
        return cls(tuple(coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]

    def __call__(self, x: Number) -> Number:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return normalize(acc)

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self.coefficients):
            if c == 0 and self.degree > 0:
                continue
            coeff = str(c) if c.denominator == 1 else f"({c})"
            if power == 0:
                parts.append(coeff)
            else:
                mono = "x" if power == 1 else f"x^{power}"
                parts.append(mono if c == 1 else f"{coeff}*{mono}")
        return " + ".join(reversed(parts))


def polynomial_sequence(p: PolySpec) -> Sequence:
    """The sequence ``k -> P(k)``, evaluated by Horner's rule."""
    return Sequence(p, f"P(k) = {p}")


def first_difference(s: Sequence) -> Sequence:
    """``k -> s(k+1) - s(k)``."""
    return Sequence(lambda k: s(k + 1) - s(k), f"D[{s.description}]")


def nth_difference(s: Sequence, n: int) -> Sequence:
    """Apply :func:`first_difference` ``n`` times; ``n == 0`` returns ``s``."""
    if n < 0:
        raise InvalidArgument(f"difference order must be >= 0, got {n}")
    for _ in range(n):
        s = first_difference(s)
    return s


def nth_difference_direct(s: Sequence, n: int, k: int) -> Number:
    """n-th difference at ``k`` from the closed form, without recursion:
    ``sum((-1)**(n-i) * C(n, i) * s(k+i))``.
    """
    if n < 0:
        raise InvalidArgument(f"difference order must be >= 0, got {n}")
    return alt_binom_sum(n, lambda i: s(k + i))


def power_sequence_difference(n: int, k: int) -> Number:
    """k-th term of the n-th difference of ``(j**n)_j``; always ``n!``."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    return alt_binom_sum(n, lambda i: (i + k) ** n)


def is_constant_prefix(s: Sequence, count: int = DEFAULT_PREFIX) -> bool:
    """True iff ``s(0) == s(1) == ... == s(count-1)``."""
    if count < 1:
        raise InvalidArgument(f"count must be >= 1, got {count}")
    first = s(0)
    return all(s(k) == first for k in range(1, count))


def is_zero_prefix(s: Sequence, count: int = DEFAULT_PREFIX) -> bool:
    return all(s(k) == 0 for k in range(count))

