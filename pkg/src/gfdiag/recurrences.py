"""Minimal linear recurrence detection over the rationals.

Berlekamp-Massey over the field of fractions finds the shortest
constant-coefficient recurrence consistent with all supplied terms.
Detection never leaves exact arithmetic; pivoting concerns do not arise
because every nonzero discrepancy is usable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import as_fraction
from .ratfunc import RatFunc
from .series import Series, gf_from_recurrence, series_of_rational


@dataclass(frozen=True)
class LinearRecurrence:
    """a_n = sum(coeffs[i-1] * a_{n-i}, i=1..order), seeded by initial."""

    coeffs: tuple[Fraction, ...]
    initial: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_fraction(c) for c in self.coeffs)
        initial = tuple(as_fraction(c) for c in self.initial)
        if len(initial) != len(coeffs):
            raise ValueError("need exactly order initial terms")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "initial", initial)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def generate(self, n: int) -> list[Fraction]:
        terms = list(self.initial[:n])
        for m in range(len(terms), n):
            terms.append(sum((self.coeffs[i] * terms[m - 1 - i] for i in range(self.order)),
                             Fraction(0)))
        return terms


def _berlekamp_massey(s: Sequence[Fraction]) -> tuple[list[Fraction], int]:
    # Connection polynomial C with C[0] = 1 and sum_i C[i] s[n-i] = 0.
    C = [Fraction(1)]
    B = [Fraction(1)]
    L = 0
    m = 1
    b = Fraction(1)
    for n in range(len(s)):
        d = s[n]
        for i in range(1, L + 1):
            if i < len(C) and C[i]:
                d += C[i] * s[n - i]
        if d == 0:
            m += 1
            continue
        coef = d / b
        new_c = C + [Fraction(0)] * max(0, len(B) + m - len(C))
        for i, bi in enumerate(B):
            new_c[i + m] -= coef * bi
        if 2 * L <= n:
            B = C
            C = new_c
            L = n + 1 - L
            b = d
            m = 1
        else:
            C = new_c
            m += 1
    return C, L


def find_min_recurrence(terms: Sequence[Fraction]) -> LinearRecurrence | None:
    """Minimal-order recurrence consistent with ALL supplied terms.

    Returns None when the minimal order exceeds len(terms)//2, i.e. when
    the terms do not overdetermine the answer.  Callers wanting a margin
    should supply at least 2*r_max + 20 terms (confidence = len - 2*order).
    """
    if len(terms) < 4:
        raise ValueError("need at least 4 terms")
    s = [as_fraction(t) for t in terms]
    C, L = _berlekamp_massey(s)
    if 2 * L > len(s):
        return None
    coeffs = tuple(-C[i] if i < len(C) else Fraction(0) for i in range(1, L + 1))
    return LinearRecurrence(coeffs, tuple(s[:L]))


def recurrence_to_gf(rec: LinearRecurrence, var: str = "z") -> RatFunc:
    """P(z)/(1 - sum c_i z^i) with deg P < order, matching the initial terms."""
    return gf_from_recurrence(rec.coeffs, rec.initial, var)


@dataclass(frozen=True)
class AgreementReport:
    agrees: bool
    first_mismatch: int | None
    lhs: Fraction | None = None
    rhs: Fraction | None = None


def certify_agreement(f: RatFunc, terms: Sequence[Fraction]) -> AgreementReport:
    """Compare the series of f against the given terms, exactly."""
    expected = [as_fraction(t) for t in terms]
    got: Series = series_of_rational(f, len(expected))
    for i, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            return AgreementReport(False, i, a, b)
    return AgreementReport(True, None)
