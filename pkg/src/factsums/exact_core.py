"""Exact integer and rational primitives.

Python's ``int`` is arbitrary precision and ``fractions.Fraction`` keeps
values in lowest terms with a positive denominator, so those two types are
the natural integer and rational carriers for every other module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Union

from .errors import InvalidArgument, NoInverseError

Number = Union[int, Fraction]


def factorial(n: int) -> int:
    """Return ``1 * 2 * ... * n`` by direct product; ``factorial(0) == 1``."""
    if n < 0:
        raise InvalidArgument(f"factorial of negative number {n}")
    result = 1
    for j in range(2, n + 1):
        result *= j
    return result


def binomial(n: int, i: int) -> int:
    """C(n, i) by the multiplicative formula; 0 when ``i > n``."""
    if n < 0 or i < 0:
        raise InvalidArgument(f"binomial({n}, {i}) needs nonnegative arguments")
    if i > n:
        return 0
    i = min(i, n - i)
    result = 1
    for j in range(1, i + 1):
        # exact at every step: result * (n - i + j) is divisible by j
        result = result * (n - i + j) // j
    return result


def to_rational(value: Number | str) -> Fraction:
    """Parse ``a/b``, an integer, or a Fraction into canonical form."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        num, sep, den = value.strip().partition("/")
        try:
            if sep:
                # Fraction() rejects a signed denominator in string form
                return Fraction(int(num), int(den))
            return Fraction(num)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"not a rational number: {value!r}") from exc
    raise InvalidArgument(f"unsupported numeric type {type(value).__name__}")


def normalize(value: Number) -> Number:
    """Collapse a Fraction with denominator 1 to ``int``."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def format_rational(value: Number) -> str:
    """Render as ``num/den`` in lowest terms, integers without ``/1``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def alt_binom_sum(n: int, term: Callable[[int], Number]) -> Number:
    """Exact value of ``sum((-1)**(n-i) * C(n, i) * term(i) for i in 0..n)``.

    Terms are accumulated in ascending ``i``. The result is an ``int``
    whenever every term is integral, otherwise a ``Fraction``.
    """
    if n < 0:
        raise InvalidArgument(f"n must be nonnegative, got {n}")
    total: Number = 0
    coeff = 1  # C(n, i), updated incrementally
    for i in range(n + 1):
        signed = coeff if (n - i) % 2 == 0 else -coeff
        total += signed * term(i)
        coeff = coeff * (n - i) // (i + 1)
    return normalize(total)


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """``base**exp % modulus`` by left-to-right square-and-multiply."""
    if modulus < 2:
        raise InvalidArgument(f"modulus must be >= 2, got {modulus}")
    if exp < 0:
        raise InvalidArgument(f"exponent must be nonnegative, got {exp}")
    result = 1
    base %= modulus
    for bit in bin(exp)[2:]:
        result = result * result % modulus
        if bit == "1":
            result = result * base % modulus
    return result


def mod_inverse(a: int, p: int) -> int:
    """x with ``a * x % p == 1`` and ``1 <= x < p``, via extended Euclid."""
    if p < 2:
        raise InvalidArgument(f"modulus must be >= 2, got {p}")
    old_r, r = a % p, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise NoInverseError(f"{a} has no inverse modulo {p} (gcd {old_r})")
    return old_s % p
