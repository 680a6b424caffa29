"""Rational functions kept in factored form.

A RatFunc is constant * prod(numerator factors^mult) / prod(denominator
factors^mult).  Products are never expanded unless a caller asks for the
single-fraction form, which is what lets the whole pipeline avoid
multivariate polynomial factorization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .poly import AnyPoly, BiPoly, Poly, VARIABLES, as_fraction, poly_gcd, unify_pair


def _constant_of(p: AnyPoly) -> Fraction | None:
    """The scalar value of a degree-0 polynomial, else None."""
    if isinstance(p, Poly):
        return p.coeffs[0] if p.degree == 0 else None
    if p.degree == 0 and p.coeffs[0].degree == 0:
        return p.coeffs[0].coeffs[0]
    return None


def _merge_factors(factors: Iterable) -> list:
    """Combine structurally equal factors, keeping first-seen order."""
    out: list[list] = []
    for p, m in factors:
        for entry in out:
            if entry[0] == p:
                entry[1] += m
                break
        else:
            out.append([p, m])
    return out


class RatFunc:
    """Factored rational function over the rationals (1 or 2 variables)."""

    __slots__ = ("constant", "numer", "denom")

    def __init__(self, constant, numer: Iterable = (), denom: Iterable = ()):
        constant = as_fraction(constant)
        numer = _merge_factors(numer)
        denom = _merge_factors(denom)
        for p, m in list(numer):
            if m < 1:
                raise ValueError("factor multiplicity must be positive")
            if p.is_zero:
                constant = Fraction(0)
        for p, m in denom:
            if m < 1:
                raise ValueError("factor multiplicity must be positive")
            if p.is_zero:
                raise ZeroDivisionError("zero polynomial in denominator")
        if constant == 0:
            numer, denom = [], []
        # Drop constant factors into the scalar so factor lists stay meaningful.
        kept_numer = []
        for p, m in numer:
            c = _constant_of(p)
            if c is not None:
                constant *= c ** m
            else:
                kept_numer.append((p, m))
        kept_denom = []
        for p, m in denom:
            c = _constant_of(p)
            if c is not None:
                constant /= c ** m
            else:
                kept_denom.append((p, m))
        if constant == 0:
            kept_numer, kept_denom = [], []
        numer, denom = self._unify_shapes(kept_numer, kept_denom)
        object.__setattr__(self, "constant", constant)
        object.__setattr__(self, "numer", tuple((p, m) for p, m in numer))
        object.__setattr__(self, "denom", tuple((p, m) for p, m in denom))

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _unify_shapes(numer, denom):
        """Lift all factors to a common Poly or BiPoly shape."""
        polys = [p for p, _ in numer] + [p for p, _ in denom]
        if not polys:
            return numer, denom
        vars_seen: list[str] = []
        bivar: tuple[str, str] | None = None
        for p in polys:
            if isinstance(p, BiPoly):
                pair = (p.outer, p.inner)
                if bivar is None:
                    bivar = pair
                elif bivar != pair:
                    raise ValueError(f"variable mismatch: {bivar} vs {pair}")
                for v in pair:
                    if v not in vars_seen:
                        vars_seen.append(v)
            else:
                if p.var not in vars_seen:
                    vars_seen.append(p.var)
        if bivar is None:
            if len(vars_seen) == 1:
                return numer, denom
            if len(vars_seen) > 2:
                raise ValueError(f"too many variables: {vars_seen}")
            names = sorted(vars_seen,
                           key=lambda v: VARIABLES.index(v) if v in VARIABLES else len(VARIABLES))
            bivar = (names[0], names[1])
        elif len(vars_seen) > 2:
            raise ValueError(f"too many variables: {vars_seen}")
        outer, inner = bivar

        def lift(p):
            return p if isinstance(p, BiPoly) else BiPoly.embed(p, outer, inner)

        return ([(lift(p), m) for p, m in numer], [(lift(p), m) for p, m in denom])

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(0)

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(1)

    @classmethod
    def from_fraction(cls, c) -> "RatFunc":
        return cls(c)

    @classmethod
    def from_poly(cls, p: AnyPoly) -> "RatFunc":
        if p.is_zero:
            return cls.zero()
        return cls(1, [(p, 1)])

    # -- structure ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.constant == 0

    @property
    def variables(self) -> tuple[str, ...]:
        for p, _ in self.numer + self.denom:
            if isinstance(p, BiPoly):
                return (p.outer, p.inner)
            return (p.var,)
        return ()

    @property
    def is_univariate(self) -> bool:
        return len(self.variables) <= 1

    @property
    def var(self) -> str:
        vs = self.variables
        if len(vs) != 1:
            raise ValueError(f"expected one variable, have {vs}")
        return vs[0]

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatFunc.zero()
        return RatFunc(self.constant * other.constant,
                       self.numer + other.numer, self.denom + other.denom)

    __rmul__ = __mul__

    def scale(self, c) -> "RatFunc":
        c = as_fraction(c)
        if c == 0 or self.is_zero:
            return RatFunc.zero()
        return RatFunc(self.constant * c, self.numer, self.denom)

    def inverse(self) -> "RatFunc":
        if self.is_zero:
            raise ZeroDivisionError("inverse of the zero function")
        return RatFunc(1 / self.constant, self.denom, self.numer)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(1 / c)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self * other.inverse()

    def __neg__(self):
        return self.scale(-1)

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            raise ValueError("negative power; use inverse() first")
        out = RatFunc.one()
        for _ in range(n):
            out = out * self
        return out

    def _expand_pair(self):
        """Expanded (numerator, denominator); polynomials, or Fractions if constant."""
        if self.is_zero:
            return Fraction(0), Fraction(1)
        num: AnyPoly | Fraction | None = None
        for p, m in self.numer:
            q = p ** m
            num = q if num is None else num * q
        den: AnyPoly | Fraction | None = None
        for p, m in self.denom:
            q = p ** m
            den = q if den is None else den * q
        if num is None:
            num = Fraction(1)
        if den is None:
            den = Fraction(1)
        if isinstance(num, Fraction):
            num = self.constant * num
        else:
            num = num.scale(self.constant)
        return num, den

    def expand_to_single_fraction(self, default_var: str = "z") -> tuple[AnyPoly, AnyPoly]:
        """Fully expanded (numerator, denominator) polynomials, no cancellation."""
        num, den = self._expand_pair()
        if isinstance(num, Fraction) and isinstance(den, Fraction):
            var = default_var
            return Poly.const(var, num / den), Poly.one(var)
        if isinstance(num, Fraction):
            num = (BiPoly.const(den.outer, den.inner, num) if isinstance(den, BiPoly)
                   else Poly.const(den.var, num))
        if isinstance(den, Fraction):
            den = (BiPoly.const(num.outer, num.inner, den) if isinstance(num, BiPoly)
                   else Poly.const(num.var, den))
        num, den = unify_pair(num, den)
        return num, den

    def reduced_fraction(self) -> tuple[Poly, Poly]:
        """Univariate only: expanded fraction with the gcd divided out.

        The denominator is normalized to constant term 1 when that term is
        nonzero, and to monic otherwise.
        """
        num, den = self.expand_to_single_fraction()
        if isinstance(num, BiPoly) or isinstance(den, BiPoly):
            raise ValueError("reduced_fraction requires a univariate function")
        if num.is_zero:
            return Poly.zero(den.var), Poly.one(den.var)
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.divrem(g)[0]
            den = den.divrem(g)[0]
        c0 = den.coeff(0)
        scale = c0 if c0 != 0 else den.leading
        return num.scale(1 / scale), den.scale(1 / scale)

    # -- addition (expands numerators, keeps denominators factored) ---------

    def add(self, other: "RatFunc") -> "RatFunc":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        n1, d1 = self._expand_pair()
        n2, d2 = other._expand_pair()
        values = [v for v in (n1, d1, n2, d2) if not isinstance(v, Fraction)]
        if not values:
            return RatFunc.from_fraction(n1 / d1 + n2 / d2)
        shape = values[0]
        for v in values[1:]:
            shape, _ = unify_pair(shape, v)

        def lift(v):
            if isinstance(v, Fraction):
                if isinstance(shape, BiPoly):
                    return BiPoly.const(shape.outer, shape.inner, v)
                return Poly.const(shape.var, v)
            return unify_pair(v, shape)[0]

        n1, d1, n2, d2 = lift(n1), lift(d1), lift(n2), lift(d2)
        num = n1 * d2 + n2 * d1
        if num.is_zero:
            return RatFunc.zero()
        return RatFunc(1, [(num, 1)], self.denom + other.denom)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.from_fraction(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.add(other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatFunc.from_fraction(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.add(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, point: dict) -> Fraction:
        """Evaluate at {variable: value}.  Raises ZeroDivisionError on a pole."""
        if self.is_zero:
            return Fraction(0)

        def ev(p: AnyPoly) -> Fraction:
            if isinstance(p, BiPoly):
                return p.evaluate(point[p.outer], point[p.inner])
            return p.evaluate(point[p.var])

        acc = self.constant
        for p, m in self.numer:
            acc *= ev(p) ** m
        for p, m in self.denom:
            v = ev(p)
            if v == 0:
                raise ZeroDivisionError("evaluation at a pole")
            acc /= v ** m
        return acc

    # -- display ------------------------------------------------------------

    @staticmethod
    def _display_factor(p: AnyPoly) -> tuple[AnyPoly, bool]:
        # Print factors with a positive constant term when possible.
        c0 = p.coeff(0).coeff(0) if isinstance(p, BiPoly) else p.coeff(0)
        if c0 < 0:
            return -p, True
        return p, False

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        constant = self.constant
        num_parts = []
        for p, m in self.numer:
            p, flipped = self._display_factor(p)
            if flipped and m % 2:
                constant = -constant
            num_parts.append(f"({p})" if m == 1 else f"({p})^{m}")
        den_parts = []
        for p, m in self.denom:
            p, flipped = self._display_factor(p)
            if flipped and m % 2:
                constant = -constant
            den_parts.append(f"({p})" if m == 1 else f"({p})^{m}")
        if constant != 1 or not num_parts:
            num_parts.insert(0, str(constant))
        text = "*".join(num_parts)
        if den_parts:
            text = f"{text} / ({'*'.join(den_parts)})"
        return text

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.constant == other.constant and self.numer == other.numer
                and self.denom == other.denom)

    def __hash__(self):
        return hash((self.constant, self.numer, self.denom))


def identity_equal(f: RatFunc, g: RatFunc) -> bool:
    """Exact rational-function equality by cross-multiplied polynomial identity."""
    nf, df = f._expand_pair()
    ng, dg = g._expand_pair()
    values = [v for v in (nf, df, ng, dg) if not isinstance(v, Fraction)]
    if not values:
        return nf / df == ng / dg
    shape = values[0]
    for v in values[1:]:
        shape, _ = unify_pair(shape, v)

    def lift(v):
        if isinstance(v, Fraction):
            if isinstance(shape, BiPoly):
                return BiPoly.const(shape.outer, shape.inner, v)
            return Poly.const(shape.var, v)
        return unify_pair(v, shape)[0]

    return lift(nf) * lift(dg) == lift(ng) * lift(df)


def compose_rational(f: RatFunc, s_numer: AnyPoly, s_denom: AnyPoly) -> RatFunc:
    """Substitute the rational expression s_numer/s_denom for f's variable.

    Each degree-d factor g becomes s_denom^d * g(s_numer/s_denom), which is a
    polynomial; the bookkeeping powers of s_denom are appended so the result
    evaluates identically to f(s_numer/s_denom) wherever defined.
    """
    if s_denom.is_zero:
        raise ZeroDivisionError("zero substitution denominator")
    s_numer, s_denom = unify_pair(s_numer, s_denom)
    if f.is_zero:
        return RatFunc.zero()

    def transform(p: AnyPoly) -> AnyPoly:
        if isinstance(p, BiPoly):
            raise ValueError("compose_rational requires a univariate function")
        d = p.degree
        # sum_i  p_i * s_numer^i * s_denom^(d-i)
        acc = None
        for i, c in enumerate(p.coeffs):
            if c == 0:
                continue
            term = (s_numer ** i) * (s_denom ** (d - i))
            term = term.scale(c)
            acc = term if acc is None else acc + term
        assert acc is not None
        return acc

    numer = [(transform(p), m) for p, m in f.numer]
    denom = [(transform(p), m) for p, m in f.denom]
    net = (sum(p.degree * m for p, m in f.denom)
           - sum(p.degree * m for p, m in f.numer))
    if net > 0:
        numer.append((s_denom, net))
    elif net < 0:
        denom.append((s_denom, -net))
    return RatFunc(f.constant, numer, denom)
