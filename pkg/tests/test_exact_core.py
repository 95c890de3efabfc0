import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from factsums.errors import InvalidArgument, NoInverseError
from factsums.exact_core import (
    alt_binom_sum,
    binomial,
    factorial,
    format_rational,
    mod_inverse,
    mod_pow,
    to_rational,
)

SMALL_PRIMES = [p for p in range(2, 400) if all(p % q for q in range(2, math.isqrt(p) + 1))]


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial_examples(n, expected):
    assert factorial(n) == expected


def test_factorial_matches_math_beyond_64_bits():
    for n in (20, 21, 100, 300):
        assert factorial(n) == math.factorial(n)
    assert factorial(300) > 2**64


@pytest.mark.parametrize("n, i, expected", [(3, 1, 3), (4, 2, 6), (3, 5, 0)])
def test_binomial_examples(n, i, expected):
    assert binomial(n, i) == expected


def test_binomial_matches_math_comb():
    for n in range(0, 80):
        for i in range(0, n + 3):
            assert binomial(n, i) == math.comb(n, i)


@pytest.mark.parametrize("n", range(2, 42))
def test_pascal_identity(n):
    for i in range(1, n):
        assert binomial(n, i) == binomial(n - 1, i - 1) + binomial(n - 1, i)


@pytest.mark.parametrize(
    "n, term, expected",
    [
        (2, lambda i: 1, 0),
        (3, lambda i: i**3, 6),
        (1, lambda i: i, 1),
    ],
)
def test_alt_binom_sum_examples(n, term, expected):
    assert alt_binom_sum(n, term) == expected


@given(st.integers(min_value=1, max_value=120))
def test_alt_binom_sum_of_constant_is_zero(n):
    assert alt_binom_sum(n, lambda i: 1) == 0


def test_alt_binom_sum_rational_terms():
    # 1 - 2*(1/2) + 1/3 computed by hand
    assert alt_binom_sum(2, lambda i: Fraction(1, i + 1)) == Fraction(1, 3)
    assert isinstance(alt_binom_sum(2, lambda i: Fraction(2, 1)), int)


@given(st.integers(), st.integers().filter(lambda q: q != 0))
def test_rational_canonical_form(p, q):
    r = to_rational(f"{p}/{q}")
    assert r.denominator >= 1
    assert math.gcd(r.numerator, r.denominator) == 1
    assert r * q == p


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-10, 5)) == "-2"
    assert format_rational(7) == "7"


def test_to_rational_rejects_garbage():
    with pytest.raises(InvalidArgument):
        to_rational("1/0")
    with pytest.raises(InvalidArgument):
        to_rational("abc")


@pytest.mark.parametrize("args, expected", [((2, 4, 5), 1), ((7, 0, 13), 1), ((3, 3, 13), 1)])
def test_mod_pow_examples(args, expected):
    assert mod_pow(*args) == expected


@given(st.integers(0, 10**30), st.integers(0, 500), st.integers(2, 10**12))
def test_mod_pow_matches_builtin(base, exp, modulus):
    assert mod_pow(base, exp, modulus) == pow(base, exp, modulus)


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**9))
def test_fermat_little_theorem(p, a):
    if a % p:
        assert mod_pow(a, p - 1, p) == 1


def test_mod_pow_rejects_small_modulus():
    with pytest.raises(InvalidArgument):
        mod_pow(3, 2, 1)


@pytest.mark.parametrize("a, p, expected", [(1, 7, 1), (3, 7, 5), (2, 13, 7)])
def test_mod_inverse_examples(a, p, expected):
    assert mod_inverse(a, p) == expected


@given(st.sampled_from(SMALL_PRIMES), st.integers(1, 10**6))
def test_mod_inverse_property(p, a):
    if a % p:
        x = mod_inverse(a, p)
        assert 1 <= x < p and a * x % p == 1


def test_mod_inverse_no_inverse():
    with pytest.raises(NoInverseError):
        mod_inverse(14, 7)
