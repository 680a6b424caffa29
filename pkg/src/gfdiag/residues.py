"""Diagonal extraction by exact residue sums, and partial fractions.

Hautus-Klarner style: the diagonal of F(x, y) is read off F(z*t, 1/t)/t.
Substitute, clear powers of t factor by factor, keep the denominator
factors whose poles stay bounded as z -> 0, and sum the residues over
each kept factor's roots.  The residue sum over all roots of a
squarefree factor p(t, z) is computed without ever naming a root: it
equals the trace of the multiplication-by-r operator on Q(z)[t]/(p),
where r = numerator * (dp/dt * other_factors)^(-1).  The result is
therefore a rational function of z with no algebraic irrationalities.

The pole-keeping rule (leading t-coefficient nonzero at z = 0) is not
proved here in general; diagonal_rational validates it per instance by
comparing against the series diagonal and reports a violation instead of
silently trusting the rule.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import BiPoly, Poly, fp_divrem, fp_mul, fp_xgcd, poly_gcd, poly_xgcd
from .ratfunc import RatFunc
from .series import diagonal_series, series_of_rational


class DegeneratePoleError(ArithmeticError):
    """Degenerate pole configuration (non-squarefree or entangled factors)."""


# ---------------------------------------------------------------------------
# The coefficient field Q(z): reduced fractions of univariate polynomials
# ---------------------------------------------------------------------------

class RatZ:
    """Element of the rational function field in one variable.

    Kept reduced (gcd divided out) with a monic denominator, so equality
    is structural.  Arithmetic cross-cancels before multiplying, which
    keeps the Euclidean reductions on small operands.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.one(num.var)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            den = Poly.one(num.var)
        elif den.degree == 0:
            c = den.coeff(0)
            if c != 1:
                num = num.scale(1 / c)
            den = Poly.one(num.var)
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.divrem(g)[0]
                den = den.divrem(g)[0]
            lead = den.leading
            if lead != 1:
                num = num.scale(1 / lead)
                den = den.scale(1 / lead)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatZ is immutable")

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatZ":
        # Trusted constructor: operands already coprime, den monic nonzero.
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        return obj

    @classmethod
    def from_const(cls, c, var: str = "z") -> "RatZ":
        return cls(Poly.const(var, c))

    @property
    def var(self) -> str:
        return self.num.var if not self.num.is_zero else self.den.var

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: "RatZ") -> "RatZ":
        if self.den.degree == 0 and other.den.degree == 0:
            return RatZ._raw(self.num + other.num, self.den)
        return RatZ(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: "RatZ") -> "RatZ":
        if self.den.degree == 0 and other.den.degree == 0:
            return RatZ._raw(self.num - other.num, self.den)
        return RatZ(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> "RatZ":
        return RatZ._raw(-self.num, self.den)

    def __mul__(self, other: "RatZ") -> "RatZ":
        if self.is_zero or other.is_zero:
            return RatZ._raw(Poly.zero(self.var), Poly.one(self.var))
        a_num, a_den = self.num, self.den
        b_num, b_den = other.num, other.den
        if b_den.degree > 0:
            g = poly_gcd(a_num, b_den)
            if g.degree > 0:
                a_num = a_num.divrem(g)[0]
                b_den = b_den.divrem(g)[0]
        if a_den.degree > 0:
            g = poly_gcd(b_num, a_den)
            if g.degree > 0:
                b_num = b_num.divrem(g)[0]
                a_den = a_den.divrem(g)[0]
        num = a_num * b_num
        den = a_den * b_den
        lead = den.leading
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        return RatZ._raw(num, den)

    def __truediv__(self, other: "RatZ") -> "RatZ":
        if other.is_zero:
            raise ZeroDivisionError("division by zero in Q(z)")
        inv_lead = 1 / other.num.leading
        inverse = RatZ._raw(other.den.scale(inv_lead), other.num.scale(inv_lead))
        return self * inverse

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatZ.from_const(other, self.var)
        if not isinstance(other, RatZ):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.degree == 0 and self.den.coeff(0) == 1:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _rz_zero(var: str) -> RatZ:
    return RatZ(Poly.zero(var))


def _rz_one(var: str) -> RatZ:
    return RatZ(Poly.one(var))


# ---------------------------------------------------------------------------
# The substitution x -> z*t, y -> 1/t with t-clearing
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HKTransform:
    """F(z*t, 1/t)/t in cleared form: numerator and factored denominator.

    cleared records the power of t multiplied into each denominator factor
    (aligned with denom_factors) and numer_cleared the total multiplied into
    the numerator product; balance_power is the residual power of t moved
    into the numerator (when positive) or appended to the denominator as a
    t^k factor (when negative).
    """

    numerator: BiPoly                       # variables (t, z)
    denom_factors: tuple[tuple[BiPoly, int], ...]
    cleared: tuple[int, ...]
    balance_power: int
    numer_cleared: int = 0

    def evaluate(self, t0, z0) -> Fraction:
        acc = self.numerator.evaluate(t0, z0)
        for p, m in self.denom_factors:
            v = p.evaluate(t0, z0)
            if v == 0:
                raise ZeroDivisionError("evaluation at a pole")
            acc /= v ** m
        return acc


def _substitute_factor(p: BiPoly, t: str = "t", z: str = "z") -> tuple[BiPoly, int]:
    """p(z*t, 1/t) * t^k with k minimal so the result is polynomial in t."""
    k = 0
    for i, j, _c in p.monomials():
        k = max(k, j - i)
    terms: dict[tuple[int, int], Fraction] = {}
    for i, j, c in p.monomials():
        key = (i - j + k, i)   # (t exponent, z exponent)
        terms[key] = terms.get(key, Fraction(0)) + c
    return BiPoly.from_monomials(t, z, terms), k


def hk_transform(f: RatFunc) -> HKTransform:
    """Substitute first_var -> z*t, second_var -> 1/t into a factored function.

    Every factor is multiplied by the minimal power of t making it
    polynomial; the cleared powers and the extra 1/t are balanced so the
    result represents exactly F(z*t, 1/t)/t.
    """
    if f.is_zero:
        return HKTransform(BiPoly.zero("t", "z"), (), (), 0)
    f_vars = f.variables
    if any(v in ("t", "z") for v in f_vars):
        raise ValueError("input variables t and z are reserved by the transform")
    if len(f_vars) == 2:
        outer, inner = f_vars
    elif len(f_vars) == 1:
        v = f_vars[0]
        outer, inner = (("x", v) if v == "y" else (v, "y"))
    else:
        outer, inner = "x", "y"

    def lift(p):
        return p if isinstance(p, BiPoly) else BiPoly.embed(p, outer, inner)

    numer = BiPoly.const("t", "z", f.constant)
    num_cleared = 0
    for p, m in f.numer:
        q, k = _substitute_factor(lift(p))
        numer = numer * (q ** m)
        num_cleared += k * m
    denom: list[tuple[BiPoly, int]] = []
    cleared: list[int] = []
    den_cleared = 0
    for p, m in f.denom:
        q, k = _substitute_factor(lift(p))
        denom.append((q, m))
        cleared.append(k)
        den_cleared += k * m
    balance = den_cleared - num_cleared - 1
    if balance > 0:
        numer = numer * BiPoly.from_monomials("t", "z", {(balance, 0): Fraction(1)})
    elif balance < 0:
        denom.append((BiPoly.from_monomials("t", "z", {(-balance, 0): Fraction(1)}), 1))
        cleared.append(0)
    return HKTransform(numer, tuple(denom), tuple(cleared), balance, num_cleared)


# ---------------------------------------------------------------------------
# Pole classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PoleClass:
    factor: BiPoly
    multiplicity: int
    index: int                     # position in HKTransform.denom_factors
    kept: bool
    reason: str
    leading_at_zero: Fraction | None = None

    def to_json_dict(self) -> dict:
        return {
            "factor": str(self.factor),
            "multiplicity": self.multiplicity,
            "classification": "kept" if self.kept else "discarded",
            "reason": self.reason,
            "leading_at_zero": None if self.leading_at_zero is None else str(self.leading_at_zero),
        }


def _is_pure_t_power(p: BiPoly) -> bool:
    return p.degree > 0 and all(c.is_zero for c in p.coeffs[:-1]) and p.leading.degree == 0


def classify_poles(h: HKTransform) -> list[PoleClass]:
    """Keep a factor iff its leading t-coefficient is nonzero at z = 0.

    Such factors have all their roots bounded as z -> 0.  Factors free of
    t contribute no poles, and pure t^k factors (the pole at the origin)
    are excluded from the residue sum by convention; the series
    cross-check in diagonal_rational guards both choices.
    """
    out = []
    for idx, (p, m) in enumerate(h.denom_factors):
        if p.degree <= 0:
            out.append(PoleClass(p, m, idx, False, "no dependence on t"))
        elif _is_pure_t_power(p):
            out.append(PoleClass(p, m, idx, False, "pure power of t (pole at the origin)",
                                 p.leading.coeff(0)))
        else:
            lead0 = p.leading.coeff(0)
            if lead0 != 0:
                out.append(PoleClass(p, m, idx, True, "poles bounded as z -> 0", lead0))
            else:
                out.append(PoleClass(p, m, idx, False, "poles escape to infinity as z -> 0",
                                     lead0))
    return out


# ---------------------------------------------------------------------------
# Residue sums as traces in the quotient ring Q(z)[t]/(p)
# ---------------------------------------------------------------------------

def _to_field_poly(p: BiPoly) -> list[RatZ]:
    # Ascending t-coefficients of p as elements of Q(z); outer var must be t.
    return [RatZ(c) for c in p.coeffs]


def _tp_monic(p: list[RatZ]) -> tuple[list[RatZ], RatZ]:
    lead = p[-1]
    return [c / lead for c in p], lead


def _tp_mod(a: list[RatZ], p_monic: list[RatZ], zero: RatZ) -> list[RatZ]:
    return fp_divrem(a, p_monic, zero)[1]


def _residue_trace_field(h: HKTransform, kept: PoleClass) -> RatZ:
    zvar = "z"
    zero, one = _rz_zero(zvar), _rz_one(zvar)
    if kept.multiplicity != 1:
        raise DegeneratePoleError(
            f"kept factor has multiplicity {kept.multiplicity}; only simple factors are supported")
    p_raw = _to_field_poly(kept.factor)
    p_monic, lead = _tp_monic(p_raw)
    d = len(p_monic) - 1
    # dp/dt of the monic factor.
    dp = [p_monic[i] * RatZ.from_const(i, zvar) for i in range(1, d + 1)]
    g, _, _ = fp_xgcd(p_monic, dp, zero, one)
    if len(g) - 1 > 0:
        raise DegeneratePoleError("kept factor is not squarefree in t")
    # Product of the remaining denominator factors, reduced mod p.
    q = [one]
    for idx, (other, m) in enumerate(h.denom_factors):
        if idx == kept.index:
            continue
        reduced = _tp_mod(_to_field_poly(other), p_monic, zero)
        for _ in range(m):
            q = _tp_mod(fp_mul(q, reduced, zero), p_monic, zero)
    denom_elt = _tp_mod(fp_mul(dp, q, zero), p_monic, zero)
    g, u, _ = fp_xgcd(denom_elt, p_monic, zero, one)
    if len(g) != 1:
        raise DegeneratePoleError("degenerate pole configuration: "
                                  "kept factor shares roots with the other factors")
    inv = [c / g[0] for c in u]
    n_red = _tp_mod(_to_field_poly(h.numerator), p_monic, zero)
    r = _tp_mod(fp_mul(n_red, inv, zero), p_monic, zero)
    # Trace of multiplication by r in the basis {1, t, ..., t^(d-1)}.
    trace = zero
    v = r + [zero] * (d - len(r))
    for j in range(d):
        trace = trace + v[j]
        if j < d - 1:
            shifted = [zero] + v
            top = shifted[d]
            v = [shifted[i] - top * p_monic[i] for i in range(d)]
    return trace / lead


def _ratz_to_ratfunc(value: RatZ) -> RatFunc:
    if value.is_zero:
        return RatFunc.zero()
    num, den = value.num, value.den
    c0 = den.coeff(0)
    scale = c0 if c0 != 0 else den.leading
    num, den = num.scale(1 / scale), den.scale(1 / scale)
    if den.degree == 0:
        return RatFunc(1, [(num, 1)])
    return RatFunc(1, [(num, 1)], [(den, 1)])


def residue_trace(h: HKTransform, kept: PoleClass) -> RatFunc:
    """Sum of residues of h over all roots of the kept factor, in z."""
    return _ratz_to_ratfunc(_residue_trace_field(h, kept))


# ---------------------------------------------------------------------------
# The full diagonal extractor
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiagnosticReport:
    poles: tuple[PoleClass, ...]
    status: str                    # "ok" or "method-assumption-violated"
    checked_terms: int
    first_mismatch: int | None = None
    lhs: str | None = None
    rhs: str | None = None

    def to_json_dict(self) -> dict:
        return {
            "status": self.status,
            "checked_terms": self.checked_terms,
            "first_mismatch": self.first_mismatch,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "poles": [p.to_json_dict() for p in self.poles],
        }


def diagonal_rational(f: RatFunc, check_terms: int = 100) -> tuple[RatFunc, DiagnosticReport]:
    """Diagonal of a bivariate rational function as a rational function.

    Sums residue traces over the kept factors, reduces and normalizes the
    result, then cross-checks its series against the series diagonal of f.
    A mismatch is reported as status "method-assumption-violated" together
    with the first disagreeing index and both exact values.
    """
    h = hk_transform(f)
    poles = classify_poles(h)
    total = _rz_zero("z")
    for pole in poles:
        if pole.kept:
            total = total + _residue_trace_field(h, pole)
    result = _ratz_to_ratfunc(total)
    status, first, lhs, rhs = "ok", None, None, None
    got = series_of_rational(result, check_terms, var="z")
    want = diagonal_series(f, check_terms)
    for i, (a, b) in enumerate(zip(got, want)):
        if a != b:
            status, first, lhs, rhs = "method-assumption-violated", i, str(a), str(b)
            break
    report = DiagnosticReport(tuple(poles), status, check_terms, first, lhs, rhs)
    return result, report


# ---------------------------------------------------------------------------
# Partial fractions over the supplied (pairwise coprime) factors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartialFractions:
    """poly_part + sum(numerator / base^power for each part)."""

    poly_part: Poly
    parts: tuple[tuple[Poly, Poly, int], ...]


def partial_fractions(f: RatFunc) -> PartialFractions:
    """Unique decomposition over the supplied denominator factors.

    No factorization beyond the given factors is attempted; the factors
    must be pairwise coprime (checked exactly).  Parts have numerator
    degree below deg(base^power); summing everything reproduces f.
    """
    if not f.is_univariate:
        raise ValueError("partial fractions requires a univariate function")
    num, den = f.expand_to_single_fraction()
    factors = [(p, m) for p, m in f.denom]
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            g = poly_gcd(factors[i][0], factors[j][0])
            if g.degree > 0:
                raise ValueError(
                    f"denominator factors are not coprime: gcd contains ({g})")
    if not factors:
        return PartialFractions(num.scale(1 / den.coeff(0)), ())
    poly_part, rem = num.divrem(den)
    parts = []
    for p, m in factors:
        dj = p ** m
        cof = den.divrem(dj)[0]
        _, u, _ = poly_xgcd(cof, dj)
        pj = (rem * u).divrem(dj)[1]
        parts.append((pj, p, m))
    return PartialFractions(poly_part, tuple(parts))
