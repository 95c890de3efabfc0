"""Command-line interface: identity sweeps and exact tables.

Exit codes: 0 all checks passed, 1 bad input (domain error), 2 usage error,
3 an identity or cross-check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, List, Optional, Sequence

from . import identities, stirling, two_squares, words
from .differences import PolySpec, is_constant_prefix, nth_difference, polynomial_sequence
from .errors import InternalInvariantError, InvalidArgument, ResourceBoundError
from .exact_core import factorial, format_rational, to_rational

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

DEFAULT_N_MAX = 50
DEFAULT_RECIPROCAL_K_MAX = 20


@dataclass
class Case:
    params: Dict[str, object]
    values: Dict[str, object]
    holds: bool


@dataclass
class RunSummary:
    command: str
    cases_checked: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def exit_code(self) -> int:
        return EXIT_OK if not self.failures else EXIT_INTERNAL


def _cell(value: object) -> object:
    """JSON/CSV encoding: exact numbers become decimal strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return value


def _encode(mapping: Dict[str, object]) -> Dict[str, object]:
    return {key: _cell(v) for key, v in mapping.items()}


def _text_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    def text(c: object) -> str:
        if c is None:
            return ""
        if isinstance(c, bool):
            return "true" if c else "false"
        return str(_cell(c))

    cells = [[str(h) for h in headers]] + [[text(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    return "\n".join(lines) + "\n"


def _csv_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(headers)
    for row in rows:
        writer.writerow(["" if c is None else _cell(c) for c in row])
    return buf.getvalue()


def _write(text: str) -> None:
    sys.stdout.write(text)


def _write_json(document: Dict[str, object]) -> None:
    _write(json.dumps(document, indent=2) + "\n")


# --- verify families -------------------------------------------------------

def _report_cases(reports: Iterable[identities.IdentityReport]) -> Iterator[Case]:
    for r in reports:
        yield Case(dict(r.parameters), {"lhs": r.lhs, "rhs": r.rhs}, r.holds)


def _fam_factorial_sum(a: argparse.Namespace) -> Iterator[Case]:
    return _report_cases(identities.report_factorial_sum(n) for n in range(1, a.n_max + 1))


def _fam_shift1(a: argparse.Namespace) -> Iterator[Case]:
    return _report_cases(identities.report_shift1(n) for n in range(1, a.n_max + 1))


def _fam_shift(a: argparse.Namespace) -> Iterator[Case]:
    shifts = [a.k] if a.k is not None else identities.DEFAULT_SHIFTS
    return _report_cases(
        identities.report_shift(n, k) for n in range(1, a.n_max + 1) for k in shifts
    )


def _fam_telescope(a: argparse.Namespace) -> Iterator[Case]:
    return _report_cases(identities.report_telescope(n) for n in range(1, a.n_max + 1))


def _fam_harmonic(a: argparse.Namespace) -> Iterator[Case]:
    return _report_cases(identities.report_harmonic(n) for n in range(1, a.n_max + 1))


def _fam_reciprocal(a: argparse.Namespace) -> Iterator[Case]:
    if a.k is not None:
        if a.k.denominator != 1 or a.k < 1:
            raise InvalidArgument(f"reciprocal needs a positive integer --k, got {format_rational(a.k)}")
        ks: Iterable[int] = [a.k.numerator]
    else:
        ks = range(1, DEFAULT_RECIPROCAL_K_MAX + 1)
    ks = list(ks)
    return _report_cases(
        identities.report_reciprocal(n, k) for n in range(1, a.n_max + 1) for k in ks
    )


def _fam_power_sum_zero(a: argparse.Namespace) -> Iterator[Case]:
    for n in range(1, a.n_max + 1):
        for l in range(n):
            value = stirling.power_sum(l, n)
            yield Case({"l": l, "n": n}, {"lhs": value, "rhs": 0}, value == 0)


def _fam_overcount(a: argparse.Namespace) -> Iterator[Case]:
    for n in range(2, a.n_max + 1):
        for k in range(1, n):
            value = words.overcount_check(n, k)
            yield Case({"n": n, "k": k}, {"lhs": value, "rhs": 1}, value == 1)


def _fam_stirling_agreement(a: argparse.Namespace) -> Iterator[Case]:
    l_max = a.l_max if a.l_max is not None else a.n_max
    cap = a.enumeration_cap if a.enumeration_cap is not None else stirling.ENUMERATION_CAP
    for l in range(1, l_max + 1):
        for n in range(1, l + 1):
            explicit = stirling.stirling2_explicit(l, n)
            recurrence = stirling.stirling2_recurrence(l, n)
            partitions = stirling.stirling2_partitions(l, n, cap) if l <= cap else None
            triple = stirling.StirlingTriple(explicit, recurrence, partitions)
            yield Case(
                {"l": l, "n": n},
                {"explicit": explicit, "recurrence": recurrence, "partitions": partitions},
                triple.agree,
            )


def _fam_two_squares(a: argparse.Namespace) -> Iterator[Case]:
    lo, hi = a.range if a.range is not None else (1, a.n_max)
    for p in two_squares.qualifying_primes(lo, hi):
        fast = two_squares.decompose_prime(p)
        brute = two_squares.decompose_brute(p)
        w = two_squares.witness_pair(p)
        hp, kp = pow(w.h, 2 * w.n, p), pow(w.k, 2 * w.n, p)
        ok = (
            fast.a**2 + fast.b**2 == p
            and (fast.a, fast.b) == (brute.a, brute.b)
            and (hp - kp) % p != 0
            and (hp + kp) % p == 0
        )
        yield Case(
            {"p": p},
            {"a": fast.a, "b": fast.b, "h": w.h, "k": w.k},
            ok,
        )


FAMILIES: Dict[str, Callable[[argparse.Namespace], Iterator[Case]]] = {
    "factorial-sum": _fam_factorial_sum,
    "shift1": _fam_shift1,
    "shift": _fam_shift,
    "telescope": _fam_telescope,
    "harmonic": _fam_harmonic,
    "reciprocal": _fam_reciprocal,
    "power-sum-zero": _fam_power_sum_zero,
    "overcount": _fam_overcount,
    "stirling-agreement": _fam_stirling_agreement,
    "two-squares": _fam_two_squares,
}


def cmd_verify(a: argparse.Namespace) -> int:
    start = time.perf_counter()
    cases = list(FAMILIES[a.family](a))
    summary = RunSummary(
        command=f"verify {a.family}",
        cases_checked=len(cases),
        failures=[c.params for c in cases if not c.holds],
        elapsed_ms=round((time.perf_counter() - start) * 1000),
    )
    if a.format == "json":
        doc: Dict[str, object] = {
            "command": summary.command,
            "cases_checked": summary.cases_checked,
            "failures": [_encode(f) for f in summary.failures],
            "elapsed_ms": summary.elapsed_ms,
        }
        if a.show_cases:
            doc["cases"] = [
                {"params": _encode(c.params), "values": _encode(c.values), "holds": c.holds}
                for c in cases
            ]
        _write_json(doc)
    elif a.format == "csv" or a.show_cases:
        headers: List[str] = []
        if cases:
            headers = list(cases[0].params) + list(cases[0].values) + ["holds"]
        rows = [list(c.params.values()) + list(c.values.values()) + [c.holds] for c in cases]
        _write((_csv_table if a.format == "csv" else _text_table)(headers, rows))
    if a.format == "text":
        status = "PASS" if not summary.failures else "FAIL"
        _write(
            f"{status} {summary.command}: {summary.cases_checked} cases, "
            f"{len(summary.failures)} failures, {summary.elapsed_ms} ms\n"
        )
        for f in summary.failures:
            _write("  failed at " + ", ".join(f"{k}={_cell(v)}" for k, v in f.items()) + "\n")
    return summary.exit_code


# --- tables ----------------------------------------------------------------

def cmd_stirling(a: argparse.Namespace) -> int:
    l_max = a.l_max if a.l_max is not None else 10
    if l_max < 1:
        raise InvalidArgument(f"--l-max must be >= 1, got {l_max}")
    rows: List[List[int]] = []
    for l in range(1, l_max + 1):
        row = []
        for n in range(1, l + 1):
            value = stirling.stirling2_explicit(l, n)
            if value != stirling.stirling2_recurrence(l, n):
                raise InternalInvariantError(f"S({l},{n}) explicit/recurrence mismatch")
            row.append(value)
        rows.append(row)
    if a.format == "json":
        _write_json({
            "command": "stirling",
            "l_max": l_max,
            "rows": [{"l": str(l), "values": [str(v) for v in row]} for l, row in enumerate(rows, 1)],
        })
        return EXIT_OK
    headers = ["l"] + [str(n) for n in range(1, l_max + 1)]
    padded = [[l] + row + [None] * (l_max - len(row)) for l, row in enumerate(rows, 1)]
    _write((_csv_table if a.format == "csv" else _text_table)(headers, padded))
    return EXIT_OK


def _parse_poly(text: str) -> PolySpec:
    items = [t for t in text.replace(" ", "").split(",")]
    if not items or any(t == "" for t in items):
        raise ValueError(f"malformed coefficient list {text!r}")
    return PolySpec(tuple(to_rational(t) for t in items))


def cmd_diff(a: argparse.Namespace) -> int:
    seq = nth_difference(polynomial_sequence(a.poly), a.order)
    terms = seq.terms(a.count)
    constant = is_constant_prefix(seq, a.count)
    if a.format == "json":
        _write_json({
            "command": "diff",
            "polynomial": str(a.poly),
            "coefficients": [format_rational(c) for c in a.poly.coefficients],
            "order": a.order,
            "terms": [format_rational(t) for t in terms],
            "constant": constant,
        })
    elif a.format == "csv":
        _write(_csv_table(["k", "value"], list(enumerate(terms))))
    else:
        _write(f"order-{a.order} difference of P(k) = {a.poly}\n")
        _write(" ".join(format_rational(t) for t in terms) + "\n")
        _write(f"constant={'true' if constant else 'false'}\n")
    return EXIT_OK


def cmd_twosquares(a: argparse.Namespace) -> int:
    if a.p is not None:
        reason = two_squares.qualification_error(a.p)
        if reason is not None:
            raise InvalidArgument(reason)
        primes: Iterable[int] = [a.p]
    else:
        lo, hi = a.range if a.range is not None else (1, DEFAULT_N_MAX)
        primes = two_squares.qualifying_primes(lo, hi)
    results = []
    for p in primes:
        t = two_squares.decompose_prime(p)
        if t.a**2 + t.b**2 != p:
            raise InternalInvariantError(f"{t.a}^2 + {t.b}^2 != {p}")
        results.append(t)
    if a.format == "json":
        _write_json({
            "command": "twosquares",
            "rows": [{"p": str(t.p), "a": str(t.a), "b": str(t.b)} for t in results],
        })
    else:
        rows = [(t.p, t.a, t.b) for t in results]
        _write((_csv_table if a.format == "csv" else _text_table)(["p", "a", "b"], rows))
    return EXIT_OK


def cmd_words(a: argparse.Namespace) -> int:
    cap = a.enumeration_cap if a.enumeration_cap is not None else words.WORD_ENUMERATION_CAP
    if a.census is not None:
        census = words.exact_letter_census(a.census)
        if a.census <= cap and census != words.exact_letter_census_enumerate(a.census, cap):
            raise InternalInvariantError(f"census mismatch at n={a.census}")
        if a.format == "json":
            _write_json({
                "command": "words",
                "n": a.census,
                "census": [{"k": str(k), "count": str(c)} for k, c in census],
            })
        else:
            _write((_csv_table if a.format == "csv" else _text_table)(["k", "count"], census))
        return EXIT_OK

    reports = [words.word_count_report(n, cap) for n in range(1, a.n_max + 1)]
    for r in reports:
        if not r.consistent:
            raise InternalInvariantError(f"word counts disagree at n={r.n}: {r}")
    headers = ["n", "repeated", "total", "n!", "enumerated"]
    rows = [
        (r.n, r.formula_count, r.total_words, factorial(r.n), r.enumerated_count)
        for r in reports
    ]
    if a.format == "json":
        _write_json({
            "command": "words",
            "rows": [dict(zip(headers, (_cell(v) for v in row))) for row in rows],
        })
    else:
        _write((_csv_table if a.format == "csv" else _text_table)(headers, rows))
    return EXIT_OK


# --- argument parsing ------------------------------------------------------

def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _rational(text: str) -> Fraction:
    try:
        return to_rational(text)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _int_range(text: str) -> tuple:
    lo, sep, hi = text.partition("..")
    try:
        if not sep:
            raise ValueError
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    if lo_i > hi_i:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_i, hi_i


def _poly(text: str) -> PolySpec:
    try:
        return _parse_poly(text)
    except (ValueError, InvalidArgument) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(
        prog="factsums",
        description="Exact verification of alternating binomial-sum identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="sweep an identity family")
    v.add_argument("family", choices=sorted(FAMILIES))
    v.add_argument("--n-max", type=_positive_int, default=DEFAULT_N_MAX)
    v.add_argument("--l-max", type=_positive_int, default=None,
                   help="upper l for stirling-agreement (defaults to --n-max)")
    v.add_argument("--k", type=_rational, default=None,
                   help="single shift for shift/reciprocal, e.g. 7/3")
    v.add_argument("--range", type=_int_range, default=None,
                   help="prime range LO..HI for two-squares")
    v.add_argument("--enumeration-cap", type=_nonnegative_int, default=None)
    v.add_argument("--show-cases", action="store_true", help="emit every case")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("stirling", parents=[common], help="triangle of S(l, n)")
    s.add_argument("--l-max", type=_positive_int, default=None)
    s.set_defaults(func=cmd_stirling)

    d = sub.add_parser("diff", parents=[common], help="finite differences of a polynomial")
    d.add_argument("--poly", type=_poly, required=True,
                   help="comma-separated coefficients, constant term first, e.g. --poly=5,-1,0,2")
    d.add_argument("--order", type=_nonnegative_int, default=1)
    d.add_argument("--count", type=_positive_int, default=10)
    d.set_defaults(func=cmd_diff)

    t = sub.add_parser("twosquares", parents=[common], help="p = a^2 + b^2 for primes 4n+1")
    t.add_argument("p", type=int, nargs="?", default=None)
    t.add_argument("--range", type=_int_range, default=None)
    t.set_defaults(func=cmd_twosquares)

    w = sub.add_parser("words", parents=[common], help="repeated-letter word counts")
    w.add_argument("--n-max", type=_positive_int, default=10)
    w.add_argument("--census", type=_positive_int, default=None,
                   help="words of length N by exact number of distinct letters")
    w.add_argument("--enumeration-cap", type=_nonnegative_int, default=None)
    w.set_defaults(func=cmd_words)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (InvalidArgument, ResourceBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    raise SystemExit(main())
