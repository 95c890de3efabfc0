"""Exit criteria: every identity family at its full stated scale, exact."""

import json
import math
import random
import subprocess
import sys
import time
from contextlib import contextmanager
from fractions import Fraction
from math import isqrt

import pytest

from acceptance_log import RESULTS
from factsums.differences import (
    PolySpec,
    is_constant_prefix,
    is_zero_prefix,
    nth_difference,
    nth_difference_direct,
    polynomial_sequence,
    power_sequence_difference,
)
from factsums.exact_core import factorial
from factsums.identities import (
    DEFAULT_SHIFTS,
    factorial_sum,
    factorial_sum_shift,
    factorial_sum_shift1,
    harmonic_alternating,
    harmonic_number,
    reciprocal_shift_sum,
    telescoping_check,
)
from factsums.stirling import (
    coefficient_C,
    power_sum,
    stirling2_explicit,
    stirling2_partitions,
    stirling2_recurrence,
    stirling2_shifted,
)
from factsums.two_squares import decompose_brute, decompose_prime, witness_pair
from factsums.words import (
    exact_letter_census,
    overcount_check,
    repeated_letter_count_enumerate,
    repeated_letter_count_formula,
)


@contextmanager
def criterion(number, name, seconds):
    start = time.perf_counter()
    RESULTS[number] = ("FAIL", name, 0.0)
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"criterion {number} took {elapsed:.2f} s (limit {seconds} s)"
    RESULTS[number] = ("PASS", name, elapsed)
    print(f"criterion {number}: PASS {name} ({elapsed:.2f} s)")


def primes_below(limit):
    flags = bytearray([1]) * limit
    flags[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return [i for i in range(limit) if flags[i]]


def test_c01_factorial_sum():
    with criterion(1, "n! as alternating sum, n <= 300", 5):
        for n in range(1, 301):
            assert factorial_sum(n) == math.factorial(n), n


def test_c02_shift_family():
    with criterion(2, "shift by 1 and by rational k, n <= 60", 5):
        for n in range(1, 61):
            assert factorial_sum_shift1(n) == math.factorial(n)
            for k in DEFAULT_SHIFTS:
                assert factorial_sum_shift(n, k) == math.factorial(n), (n, k)
        assert {str(k) for k in DEFAULT_SHIFTS} == {"0", "1", "2", "7", "100", "1/2", "7/3", "-5/4"}


def test_c03_telescoping():
    with criterion(3, "telescoping sum vanishes, n <= 100", 5):
        for n in range(1, 101):
            assert telescoping_check(n) == 0, n


def test_c04_finite_differences():
    with criterion(4, "closed form vs recursion, constancy, n-th difference of k^n", 10):
        rng = random.Random(20261015)
        for _ in range(200):
            degree = rng.randint(0, 6)
            coeffs = [rng.randint(-9, 9) for _ in range(degree + 1)]
            s = polynomial_sequence(PolySpec(tuple(coeffs)))
            for n in range(1, 7):
                recursive = nth_difference(s, n)
                for k in range(11):
                    assert nth_difference_direct(s, n, k) == recursive(k)
        for degree in range(0, 9):
            for _ in range(5):
                coeffs = [rng.randint(-9, 9) for _ in range(degree)] + [rng.choice([-3, -1, 1, 2, 5])]
                p = PolySpec(tuple(coeffs))
                s = polynomial_sequence(p)
                top = nth_difference(s, degree)
                assert is_constant_prefix(top, 25)
                assert top(0) == factorial(degree) * p.leading
                assert is_zero_prefix(nth_difference(s, degree + 1), 25)
        for n in range(1, 26):
            for k in range(26):
                assert power_sequence_difference(n, k) == math.factorial(n), (n, k)


def test_c05_power_sum():
    with criterion(5, "power sums vanish below n; l! C(l,n) equals power sum", 10):
        for n in range(1, 41):
            for l in range(n):
                assert power_sum(l, n) == 0, (l, n)
        for l in range(1, 26):
            for n in range(1, l + 1):
                assert math.factorial(l) * coefficient_C(l, n) == power_sum(l, n), (l, n)


def test_c06_stirling_agreement():
    with criterion(6, "Stirling numbers: explicit, recurrence, enumeration, shift", 60):
        for l in range(1, 61):
            for n in range(1, l + 1):
                assert stirling2_explicit(l, n) == stirling2_recurrence(l, n), (l, n)
        for l in range(1, 13):
            for n in range(1, l + 1):
                assert stirling2_partitions(l, n) == stirling2_recurrence(l, n), (l, n)
        for l in range(1, 41):
            for n in range(1, l + 1):
                assert stirling2_shifted(l, n) == stirling2_recurrence(l + 1, n + 1), (l, n)


def test_c07_words():
    with criterion(7, "repeated-letter words, overcount, census", 30):
        for n in range(1, 8):
            assert repeated_letter_count_formula(n) == repeated_letter_count_enumerate(n), n
        for n in range(1, 201):
            assert repeated_letter_count_formula(n) + math.factorial(n) == n**n, n
        for n in range(2, 41):
            for k in range(1, n):
                assert overcount_check(n, k) == 1, (n, k)
        for n in range(1, 31):
            census = exact_letter_census(n)
            assert sum(c for _, c in census) == n**n
            assert census[-1] == (n, math.factorial(n))


def test_c08_negative_exponents():
    with criterion(8, "harmonic and reciprocal-shift identities", 20):
        for n in range(1, 501):
            assert harmonic_alternating(n) == (-1) ** (n - 1) * harmonic_number(n), n
        for n in range(1, 101):
            for k in range(1, 21):
                expected = Fraction(
                    (-1) ** n * math.factorial(n) * math.factorial(k - 1), math.factorial(n + k)
                )
                assert reciprocal_shift_sum(n, k) == expected, (n, k)


def test_c09_two_squares():
    with criterion(9, "two-squares decomposition of primes 4n+1", 30):
        primes = primes_below(10**5)
        qualifying = [p for p in primes if p % 4 == 1]
        for p in qualifying:
            t = decompose_prime(p)
            assert t.a**2 + t.b**2 == p and 1 <= t.a <= t.b
        for p in (q for q in qualifying if q < 10**4):
            t, oracle = decompose_prime(p), decompose_brute(p)
            assert {t.a, t.b} == {oracle.a, oracle.b}, p
        sample = random.Random(5).sample([p for p in qualifying if p < 10**4], 100)
        for p in sample:
            w = witness_pair(p)
            n = (p - 1) // 4
            assert 1 <= w.h < w.k < p and w.n == n
            assert (pow(w.h, 2 * n, p) - pow(w.k, 2 * n, p)) % p != 0
            assert (pow(w.h, 2 * n, p) + pow(w.k, 2 * n, p)) % p == 0


def _cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "factsums", *args], capture_output=True, text=True, timeout=60
    )
    return proc.returncode, proc.stdout


def _strings_only(doc):
    if isinstance(doc, dict):
        return all(_strings_only(v) for v in doc.values())
    if isinstance(doc, list):
        return all(_strings_only(v) for v in doc)
    return not isinstance(doc, float)


def test_c10_cli_contract():
    with criterion(10, "CLI exit codes, JSON, decimal-string numbers", 60):
        for args in (
            ("verify", "factorial-sum", "--n-max", "25", "--show-cases"),
            ("stirling", "--l-max", "30"),
            ("diff", "--poly=0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1", "--order", "23", "--count", "3"),
            ("twosquares", "--range", "1..200"),
            ("words", "--n-max", "22"),
        ):
            code, out = _cli(*args, "--format", "json")
            assert code == 0, args
            doc = json.loads(out)
            assert json.loads(json.dumps(doc)) == doc
            assert _strings_only(doc)
        code, out = _cli("diff", "--poly=0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,1",
                         "--order", "23", "--count", "3", "--format", "json")
        assert json.loads(out)["terms"] == [str(math.factorial(23))] * 3
        code, out = _cli("words", "--n-max", "22", "--format", "json")
        assert json.loads(out)["rows"][21]["total"] == str(22**22)
        assert _cli("verify", "nosuchfamily")[0] == 2
        assert _cli("twosquares", "7")[0] == 1
        assert _cli("diff", "--poly=a,b")[0] == 2
