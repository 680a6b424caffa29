"""The claims catalog: every transcribed identity checked exactly.

Each claim compares two exactly computed objects, either termwise up to a
truncation or as a cross-multiplied rational-function identity.  Claims
whose transcribed form is known (from recomputation) to disagree with the
brute-force oracles carry an expected_status annotation, so the suite is
deterministic: it exits cleanly when every claim matches its recorded
expectation, and a failing claim always carries an exact witness.

k-bonacci claims run under both index conventions:
    A:  a_0 = 1, generating function 1/(1 - z - ... - z^k)
    B:  a_0 = 0, generating function z/(1 - z - ... - z^k)
and the report records which convention passes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .gfbuild import build_convolution_gf, printed_gf
from .poly import Poly
from .ratfunc import compose_rational, identity_equal
from .residues import diagonal_rational
from .series import (
    SequenceSpec,
    binomial_convolution_sequence,
    bivariate_series,
    convolution_grid,
    generate_sequence,
    kbonacci,
    series_of_rational,
)
from .textform import parse_ratfunc

CONVENTIONS = ("A", "B")
_SHIFTED = {"A": False, "B": True}


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    first_mismatch: int | str | None = None
    lhs: str | None = None
    rhs: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "status": "pass" if self.passed else "fail",
            "first_mismatch": self.first_mismatch,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass(frozen=True)
class Claim:
    id: str
    description: str
    expected_status: str                       # "pass", "fail", or "either"
    check: Callable[[int, str | None], CheckResult]
    conventions: tuple[str, ...] = ()
    note: str = ""


@dataclass(frozen=True)
class ClaimReport:
    id: str
    status: str                                # "pass" or "fail"
    first_mismatch: int | str | None
    lhs: str | None
    rhs: str | None
    runtime_ms: int
    expected_status: str
    matched_expected: bool
    note: str = ""
    conventions: dict | None = None

    def to_json_dict(self) -> dict:
        out = {
            "id": self.id,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "runtime_ms": self.runtime_ms,
            "expected_status": self.expected_status,
            "matched_expected": self.matched_expected,
            "note": self.note,
        }
        if self.conventions is not None:
            out["conventions"] = {k: v.to_json_dict() for k, v in self.conventions.items()}
        return out


def _compare_terms(lhs, rhs) -> CheckResult:
    for i, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return CheckResult(False, i, str(a), str(b))
    return CheckResult(True)


def _kbonacci_terms(k: int, convention: str, count: int) -> list[Fraction]:
    return list(generate_sequence(kbonacci(k, shifted=_SHIFTED[convention]), count))


def _self_convolution(k: int, convention: str, count: int) -> list[Fraction]:
    terms = _kbonacci_terms(k, convention, count)
    return binomial_convolution_sequence(terms, terms, count)


def _printed_vs_brute(catalog_id: str, k: int):
    def check(n: int, convention: str | None) -> CheckResult:
        lhs = series_of_rational(printed_gf(catalog_id), n + 1)
        rhs = _self_convolution(k, convention, n + 1)
        return _compare_terms(lhs, rhs)
    return check


# -- individual checks -------------------------------------------------------

def _check_fib_closed_form(n: int, convention=None) -> CheckResult:
    fib = _kbonacci_terms(2, "B", n + 1)
    lucas = generate_sequence(SequenceSpec(2, (1, 1), (2, 1)), n + 1)
    lhs = binomial_convolution_sequence(fib, fib, n + 1)
    rhs = [(Fraction(-2) + Fraction(2) ** m * lucas[m]) / 5 for m in range(n + 1)]
    return _compare_terms(lhs, rhs)


def _check_fib_diag_printed(n: int, convention=None) -> CheckResult:
    lhs = series_of_rational(printed_gf("fib.diag.printed"), n + 1)
    rhs = _self_convolution(2, "B", n + 1)
    return _compare_terms(lhs, rhs)


def _check_fib_h_printed(n: int, convention=None) -> CheckResult:
    size = min(n + 1, 40)
    fib = _kbonacci_terms(2, "B", size)
    grid = bivariate_series(printed_gf("fib.H.printed"), size, size)
    want = convolution_grid(fib, fib, size, size)
    # Scan by total degree so the reported witness has minimal order.
    for s in range(2 * size - 1):
        for i in range(max(0, s - size + 1), min(s, size - 1) + 1):
            j = s - i
            if grid[i][j] != want[i][j]:
                return CheckResult(False, f"x^{i}*y^{j}", str(grid[i][j]), str(want[i][j]))
    return CheckResult(True)


def _check_trib_first_term(n: int, convention: str) -> CheckResult:
    lhs = series_of_rational(printed_gf("trib.diag.term1"), n + 1)
    t = _kbonacci_terms(3, convention, n + 3)

    def tt(i):
        return t[i] if i >= 0 else Fraction(0)

    rhs = [(Fraction(2) ** (m + 1) * tt(m + 1)
            + Fraction(1, 2) * Fraction(2) ** m * tt(m)
            + Fraction(5, 2) * Fraction(2) ** (m - 1) * tt(m - 1)) / 11
           for m in range(n + 1)]
    return _compare_terms(lhs, rhs)


def _check_trib_u_binomial(n: int, convention: str) -> CheckResult:
    u = series_of_rational(printed_gf("trib.U_gf"), n + 1)
    t = _kbonacci_terms(3, convention, n + 3)
    rhs = [sum((t[k - 1] * (-1) ** k * comb(m + 2, k) for k in range(1, m + 3)),
               Fraction(0))
           for m in range(n + 1)]
    return _compare_terms(u, rhs)


def _check_trib_second_term(n: int, convention=None) -> CheckResult:
    lhs = series_of_rational(printed_gf("trib.second_term"), n + 1)
    u = list(series_of_rational(printed_gf("trib.U_gf"), n + 1))

    def uu(i):
        return u[i] if i >= 0 else Fraction(0)

    rhs = [(uu(m) + uu(m - 1) - 8 * uu(m - 2)) / 11 for m in range(n + 1)]
    return _compare_terms(lhs, rhs)


def _check_trib_u_gf_identity(n: int, convention=None) -> CheckResult:
    # Rational-function identity: truncation independent, a complete proof.
    f = parse_ratfunc("z^3/(1-z-z^2-z^3)")
    composed = compose_rational(f, Poly("x", [0, -1]), Poly("x", [1, -1]))
    target = parse_ratfunc("-x^3/(1-2*x+2*x^3)")
    if identity_equal(composed, target):
        return CheckResult(True)
    return CheckResult(False, "identity", str(composed), str(target))


def _check_trib_arbitrary_init(n: int, convention=None) -> CheckResult:
    spec = SequenceSpec(3, (1, 1, 1), (1, 0, 2))
    depth = min(n, 60)
    gf = build_convolution_gf(spec, spec).F
    result, report = diagonal_rational(gf, check_terms=depth)
    if report.status != "ok":
        return CheckResult(False, report.first_mismatch, report.lhs, report.rhs)
    terms = list(generate_sequence(spec, depth + 1))
    brute = binomial_convolution_sequence(terms, terms, depth + 1)
    got = series_of_rational(result, depth + 1)
    return _compare_terms(got, brute)


# -- registry ----------------------------------------------------------------

_CLAIMS: dict[str, Claim] = {}


def _register(claim: Claim) -> None:
    _CLAIMS[claim.id] = claim


_register(Claim(
    "fib.closed_form",
    "sum C(n,k) F_k F_{n-k} equals (-2 + 2^n L_n)/5 with Lucas numbers (2, 1, ...)",
    "pass", _check_fib_closed_form))
_register(Claim(
    "fib.diag.printed",
    "Transcribed diagonal GF z^2/((1-z)(1-2z-4z^2)) vs the brute-force "
    "Fibonacci self-convolution",
    "fail", _check_fib_diag_printed,
    note="recomputation shows the transcribed form is off by a factor 2; "
         "2 * printed equals the brute-force GF as a rational-function identity"))
_register(Claim(
    "fib.H.printed",
    "Transcribed double GF vs the brute-force convolution grid",
    "fail", _check_fib_h_printed,
    note="the transcribed denominator's x^2*y and x^2*y^2 signs differ from the "
         "derived construction; first grid disagreement is at x^3*y^3"))
_register(Claim(
    "trib.diag.printed",
    "Transcribed two-term diagonal GF vs the brute-force Tribonacci "
    "self-convolution",
    "pass", _printed_vs_brute("trib.diag.printed", 3), conventions=CONVENTIONS))
_register(Claim(
    "trib.first_term",
    "Coefficient formula (1/11)(2^(n+1) T_{n+1} + (1/2) 2^n T_n + (5/2) 2^(n-1) "
    "T_{n-1}) vs the series of (1/11)(1+z+10z^2)/(1-2z-4z^2-8z^3)",
    "either", _check_trib_first_term, conventions=CONVENTIONS,
    note="recomputation finds a mismatch under both conventions (series term "
         "20/11 at n=2 vs formula values 23/11 under B and 41/11 under A); "
         "witnesses are the first disagreeing index per convention"))
_register(Claim(
    "trib.U_binomial",
    "U_m = sum_{k>=1} T_{k-1} (-1)^k C(m+2,k) with U the series of 1/(1-2z+2z^3)",
    "pass", _check_trib_u_binomial, conventions=CONVENTIONS))
_register(Claim(
    "trib.second_term",
    "Coefficient n of (1/11)(1+z-8z^2)/(1-2z+2z^3) equals "
    "(1/11)(U_n + U_{n-1} - 8 U_{n-2})",
    "pass", _check_trib_second_term))
_register(Claim(
    "trib.U_gf_identity",
    "z^3/(1-z-z^2-z^3) at z = -x/(1-x) equals -x^3/(1-2x+2x^3), as a "
    "cross-multiplied polynomial identity",
    "pass", _check_trib_u_gf_identity))
_register(Claim(
    "tetra.diag.printed",
    "Transcribed Tetranacci diagonal GF vs the brute-force self-convolution",
    "pass", _printed_vs_brute("tetra.diag.printed", 4), conventions=CONVENTIONS))
_register(Claim(
    "penta.diag.printed",
    "Transcribed Pentanacci diagonal GF vs the brute-force self-convolution",
    "pass", _printed_vs_brute("penta.diag.printed", 5), conventions=CONVENTIONS,
    note="verified at build time: passes under convention B (shifted), "
         "fails under convention A"))
_register(Claim(
    "trib.arbitrary_init",
    "Smoke claim: the residue diagonal of a custom-initial (1, 0, 2) Tribonacci "
    "convolution GF agrees with the series and the brute-force oracle",
    "pass", _check_trib_arbitrary_init))


def claim_ids() -> list[str]:
    return sorted(_CLAIMS)


def get_claim(claim_id: str) -> Claim:
    try:
        return _CLAIMS[claim_id]
    except KeyError:
        raise ValueError(f"unknown claim id: {claim_id}") from None


def run_claim(claim_id: str, n: int = 200) -> ClaimReport:
    """Run one claim to truncation n (ignored by identity claims)."""
    claim = get_claim(claim_id)
    start = time.perf_counter()
    if claim.conventions:
        results = {c: claim.check(n, c) for c in claim.conventions}
        passing = [c for c in claim.conventions if results[c].passed]
        status = "pass" if passing else "fail"
        if passing:
            first, lhs, rhs = None, None, None
            verdicts = f"passes under convention {', '.join(passing)}"
            failing = [c for c in claim.conventions if not results[c].passed]
            if failing:
                verdicts += f"; fails under {', '.join(failing)}"
        else:
            # Surface the first convention's witness; all are in `conventions`.
            lead = results[claim.conventions[0]]
            first, lhs, rhs = lead.first_mismatch, lead.lhs, lead.rhs
            verdicts = "fails under every convention"
        note = f"{verdicts}. {claim.note}".strip()
    else:
        results = None
        res = claim.check(n, None)
        status = "pass" if res.passed else "fail"
        first, lhs, rhs = res.first_mismatch, res.lhs, res.rhs
        note = claim.note
    runtime_ms = int((time.perf_counter() - start) * 1000)
    matched = claim.expected_status == "either" or status == claim.expected_status
    return ClaimReport(claim.id, status, first, lhs, rhs, runtime_ms,
                       claim.expected_status, matched, note, results)


def run_all(n: int = 200) -> list[ClaimReport]:
    """Run every claim, ordered by id; deterministic outcome fields."""
    return [run_claim(claim_id, n) for claim_id in claim_ids()]
