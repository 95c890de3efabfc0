"""Stirling numbers of the second kind, computed three independent ways.

* :func:`stirling2_explicit` evaluates the alternating sum
  ``sum((-1)**(n-i) * i**l / ((n-i)! * i!))`` in exact rationals;
* :func:`stirling2_recurrence` uses ``S(l,n) = n*S(l-1,n) + S(l-1,n-1)``;
* :func:`stirling2_partitions` counts set partitions by enumerating
  restricted-growth strings.

The module also carries the composition machinery behind the Taylor
coefficient of ``x**l`` in ``(e**x - 1)**n``.
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Sequence, Tuple

from .errors import InternalInvariantError, InvalidArgument, ResourceBoundError
from .exact_core import alt_binom_sum, factorial, normalize

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class Composition:
    """Nondecreasing parts ``1 <= i_1 <= ... <= i_n``."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts or parts[0] < 1:
            raise InvalidArgument(f"parts must be nonempty and >= 1: {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise InvalidArgument(f"parts must be nondecreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def total(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class StirlingTriple:
    explicit: int
    recurrence: int
    partitions: Optional[int] = None

    @property
    def agree(self) -> bool:
        values = {self.explicit, self.recurrence}
        if self.partitions is not None:
            values.add(self.partitions)
        return len(values) == 1


def power_sum(l: int, n: int) -> int:
    """``sum((-1)**(n-i) * C(n,i) * i**l)``: zero below ``l = n``, else ``n! * S(l,n)``."""
    if n < 1 or l < 0:
        raise InvalidArgument(f"power_sum needs n >= 1, l >= 0; got l={l}, n={n}")
    return alt_binom_sum(n, lambda i: i**l)


def _check_range(l: int, n: int) -> None:
    if not 1 <= n <= l:
        raise InvalidArgument(f"need 1 <= n <= l, got l={l}, n={n}")


def _as_integer(value: Fraction | int, what: str) -> int:
    value = Fraction(value)
    if value.denominator != 1:
        raise InternalInvariantError(f"{what} is not an integer: {value}")
    return value.numerator


def stirling2_explicit(l: int, n: int) -> int:
    """S(l, n) from the explicit alternating sum over ``(n-i)! * i!``."""
    _check_range(l, n)
    total = Fraction(0)
    for i in range(n + 1):
        sign = 1 if (n - i) % 2 == 0 else -1
        total += Fraction(sign * i**l, factorial(n - i) * factorial(i))
    return _as_integer(total, f"S({l},{n})")


_rows: List[Tuple[int, ...]] = [(1,)]
_rows_lock = threading.Lock()


def _recurrence_row(l: int) -> Tuple[int, ...]:
    with _rows_lock:
        while len(_rows) <= l:
            prev = _rows[-1]
            m = len(prev)  # next row index
            row = [0] * (m + 1)
            for n in range(1, m + 1):
                above = prev[n] if n < m else 0
                row[n] = n * above + prev[n - 1]
            _rows.append(tuple(row))
        return _rows[l]


def stirling2_recurrence(l: int, n: int) -> int:
    """S(l, n) via the triangle recurrence, base ``S(0,0) = 1``."""
    if l < 0 or n < 0:
        raise InvalidArgument(f"need l, n >= 0, got l={l}, n={n}")
    if n > l:
        return 0
    return _recurrence_row(l)[n]


def restricted_growth_strings(l: int, n: int) -> Iterator[Tuple[int, ...]]:
    """Yield the RGS of length ``l`` with exactly ``n`` blocks, in lex order.

    ``a[0] = 0`` and ``a[j] <= 1 + max(a[:j])``; string ``a`` encodes the
    partition putting element ``j`` into block ``a[j]``.
    """
    if l == 0:
        if n == 0:
            yield ()
        return
    a = [0] * l

    def extend(pos: int, blocks: int) -> Iterator[Tuple[int, ...]]:
        if pos == l:
            if blocks == n:
                yield tuple(a)
            return
        if blocks + (l - pos) < n:
            return
        for v in range(min(blocks + 1, n)):
            a[pos] = v
            yield from extend(pos + 1, max(blocks, v + 1))

    yield from extend(1, 1)


def stirling2_partitions(l: int, n: int, cap: int = ENUMERATION_CAP) -> int:
    """S(l, n) by exhaustively walking restricted-growth strings."""
    _check_range(l, n)
    if l > cap:
        raise ResourceBoundError(
            f"enumeration of set partitions limited to l <= {cap}, got l={l}"
        )
    a = [0] * l
    count = 0
    # iterative depth-first walk; positions 1..l-1 carry a digit each
    pos, blocks_at = 1, [1] * (l + 1)
    if l == 1:
        return 1 if n == 1 else 0
    a[1] = -1
    while pos >= 1:
        blocks = blocks_at[pos]
        a[pos] += 1
        if a[pos] >= min(blocks + 1, n) or blocks + (l - pos) < n:
            pos -= 1
            continue
        nb = blocks if a[pos] < blocks else blocks + 1
        if pos == l - 1:
            if nb == n:
                count += 1
            continue
        blocks_at[pos + 1] = nb
        pos += 1
        a[pos] = -1
    return count


def compositions_nondecreasing(l: int, n: int) -> List[Composition]:
    """All nondecreasing ``n``-tuples of positive parts summing to ``l``, lex order."""
    _check_range(l, n)
    out: List[Composition] = []
    parts: List[int] = []

    def build(remaining: int, slots: int, low: int) -> None:
        if slots == 1:
            if remaining >= low:
                out.append(Composition(tuple(parts) + (remaining,)))
            return
        # every later part is >= this one, so it can use at most remaining/slots
        for v in range(low, remaining // slots + 1):
            parts.append(v)
            build(remaining - v, slots - 1, v)
            parts.pop()

    build(l, n, 1)
    return out


def arrangement_count(c: Composition | Sequence[int]) -> int:
    """Distinct orderings of the multiset of parts: ``n! / prod(mult!)``."""
    parts = c.parts if isinstance(c, Composition) else tuple(c)
    result = factorial(len(parts))
    for mult in Counter(parts).values():
        result //= factorial(mult)
    return result


def coefficient_C(l: int, n: int) -> Fraction | int:
    """Coefficient of ``x**l`` in ``(e**x - 1)**n``, summed over compositions."""
    if n < 1 or l < 0:
        raise InvalidArgument(f"need n >= 1, l >= 0; got l={l}, n={n}")
    if l < n:
        return 0
    total = Fraction(0)
    for comp in compositions_nondecreasing(l, n):
        denom = 1
        for part in comp.parts:
            denom *= factorial(part)
        total += Fraction(arrangement_count(comp), denom)
    return normalize(total)


def stirling2_shifted(l: int, n: int) -> int:
    """``sum((-1)**(n-i) * (i+1)**l / ((n-i)! * i!))``, equal to S(l+1, n+1)."""
    _check_range(l, n)
    total = Fraction(0)
    for i in range(n + 1):
        sign = 1 if (n - i) % 2 == 0 else -1
        total += Fraction(sign * (i + 1) ** l, factorial(n - i) * factorial(i))
    return _as_integer(total, f"shifted sum at l={l}, n={n}")


def surjection_count(l: int, n: int) -> int:
    """Maps from an ``l``-set onto an ``n``-set: ``n! * S(l, n)``."""
    if n < 1:
        raise InvalidArgument(f"n must be >= 1, got {n}")
    return factorial(n) * stirling2_recurrence(l, n)


def stirling_triple(l: int, n: int, cap: int = ENUMERATION_CAP) -> StirlingTriple:
    """All available computations of S(l, n); partitions only when ``l <= cap``."""
    triple = StirlingTriple(
        explicit=stirling2_explicit(l, n),
        recurrence=stirling2_recurrence(l, n),
        partitions=stirling2_partitions(l, n, cap) if l <= cap else None,
    )
    if not triple.agree:
        raise InternalInvariantError(f"S({l},{n}) disagreement: {triple}")
    return triple
