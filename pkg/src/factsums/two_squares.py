"""Writing a prime ``p = 4n + 1`` as a sum of two squares.

The route follows the classical existence argument step by step:

1. find ``1 <= h < k < p`` with ``p`` not dividing ``h**(2n) - k**(2n)``
   (such a pair must exist, because the ``2n``-th difference of
   ``(j**(2n))_j`` is ``(2n)!``, a number ``p`` cannot divide);
2. Fermat's little theorem then forces ``p | h**(2n) + k**(2n)``, so
   ``x = (h / k)**n mod p`` satisfies ``x**2 == -1 (mod p)``;
3. the Euclidean remainder sequence of ``(p, x)`` yields ``a**2 + b**2 = p``
   at the first two remainders below ``sqrt(p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterator, List, Tuple

from .errors import InternalInvariantError, InvalidArgument
from .exact_core import mod_inverse, mod_pow

BRUTE_FORCE_LIMIT = 10**8

# Deterministic Miller-Rabin witnesses; complete for m < 3.3 * 10**24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@dataclass(frozen=True)
class TwoSquares:
    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (1 <= self.a <= self.b and self.a**2 + self.b**2 == self.p):
            raise InternalInvariantError(f"bad decomposition {self}")


@dataclass(frozen=True)
class WitnessPair:
    h: int
    k: int
    n: int

    @property
    def p(self) -> int:
        return 4 * self.n + 1


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    for q in _MR_BASES:
        if m % q == 0:
            return m == q
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def qualification_error(p: int) -> str | None:
    """Reason ``p`` is not a prime ``4n + 1`` with ``n >= 1``, or None."""
    if p % 4 != 1:
        return f"{p} ≡ {p % 4} (mod 4)"
    if p < 5:
        return f"{p} is not a prime of the form 4n+1 with n >= 1"
    if not is_prime(p):
        return f"{p} is composite"
    return None


def _require_qualifying(p: int) -> None:
    reason = qualification_error(p)
    if reason is not None:
        raise InvalidArgument(reason)


def witness_pair(p: int) -> WitnessPair:
    """Lexicographically first ``(h, k)`` with ``p`` not dividing ``h**(2n) - k**(2n)``."""
    _require_qualifying(p)
    n = (p - 1) // 4
    for h in range(1, p - 1):
        hp = mod_pow(h, 2 * n, p)
        for k in range(h + 1, p):
            kp = mod_pow(k, 2 * n, p)
            if hp != kp:
                if (hp + kp) % p != 0:
                    raise InternalInvariantError(
                        f"p={p} does not divide h^2n + k^2n for h={h}, k={k}"
                    )
                return WitnessPair(h, k, n)
    raise InternalInvariantError(f"no witness pair for p={p}")


def nonconstancy_witness(p: int) -> Tuple[int, int]:
    """Two indices ``j1 < j2`` whose ``2n``-th powers differ mod ``p``."""
    _require_qualifying(p)
    n = (p - 1) // 4
    first = mod_pow(0, 2 * n, p)
    for j in range(1, p):
        if mod_pow(j, 2 * n, p) != first:
            return 0, j
    raise InternalInvariantError(f"j^2n mod {p} is constant")


def _canonical_root(x: int, p: int) -> int:
    if x * x % p != p - 1:
        raise InternalInvariantError(f"{x}^2 is not -1 mod {p}")
    return min(x, p - x)


def sqrt_minus_one(p: int) -> int:
    """The smaller square root of -1 mod ``p``, built from :func:`witness_pair`."""
    w = witness_pair(p)
    ratio = w.h * mod_inverse(w.k, p) % p
    return _canonical_root(mod_pow(ratio, w.n, p), p)


def sqrt_minus_one_nonresidue(p: int) -> int:
    """Same root as ``q**((p-1)/4)`` for the least quadratic non-residue ``q``."""
    _require_qualifying(p)
    q = 2
    while mod_pow(q, (p - 1) // 2, p) != p - 1:
        q += 1
    return _canonical_root(mod_pow(q, (p - 1) // 4, p), p)


def decompose_prime(p: int) -> TwoSquares:
    """``(a, b)`` with ``a <= b`` and ``a**2 + b**2 == p``."""
    x = sqrt_minus_one(p)
    limit = isqrt(p)
    a, b = p, x
    while b > limit:
        a, b = b, a % b
    r1, r2 = b, a % b
    if r1 * r1 + r2 * r2 != p:
        raise InternalInvariantError(f"Euclidean reduction failed for p={p}")
    return TwoSquares(p, min(r1, r2), max(r1, r2))


def decompose_brute(p: int) -> TwoSquares:
    """Scan ``a = 1 .. isqrt(p // 2)`` for ``p - a**2`` a perfect square."""
    _require_qualifying(p)
    if p > BRUTE_FORCE_LIMIT:
        raise InvalidArgument(f"brute-force scan limited to p <= {BRUTE_FORCE_LIMIT}")
    for a in range(1, isqrt(p // 2) + 1):
        rest = p - a * a
        b = isqrt(rest)
        if b * b == rest:
            return TwoSquares(p, a, b)
    raise InternalInvariantError(f"no two-squares representation found for p={p}")


def qualifying_primes(lo: int, hi: int) -> Iterator[int]:
    """Primes ``p = 4n + 1 >= 5`` with ``lo <= p <= hi``, ascending."""
    start = max(lo, 5)
    start += (1 - start) % 4
    for p in range(start, hi + 1, 4):
        if is_prime(p):
            yield p


def decompose_range(lo: int, hi: int) -> List[TwoSquares]:
    return [decompose_prime(p) for p in qualifying_primes(lo, hi)]
