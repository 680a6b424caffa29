"""Text format for polynomials and rational functions.

Grammar (whitespace insensitive):

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | primary
    primary := atom ('^' INT)?
    atom    := INT | VAR | '(' expr ')'

Variables come from {x, y, z, t, w}; rationals are written p/q, which the
grammar handles as ordinary division.  Printing (Poly.__str__ and
BiPoly.__str__) emits terms like "1 - 2*z - 4*z^2" that parse back to the
same polynomial.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import BiPoly, Poly, VARIABLES
from .ratfunc import RatFunc


class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[a-zA-Z])|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(f"unexpected character at {pos}: {text[pos:pos+10]!r}")
            break
        pos = m.end()
        if m.group("int") is not None:
            tokens.append(("int", m.group("int")))
        elif m.group("var") is not None:
            name = m.group("var")
            if name not in VARIABLES:
                raise ParseError(f"unknown variable {name!r}; allowed: {', '.join(VARIABLES)}")
            tokens.append(("var", name))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


def _as_ratfunc(v) -> RatFunc:
    return v if isinstance(v, RatFunc) else RatFunc.from_fraction(v)


def _mul(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a * b
    if isinstance(a, Fraction):
        return _as_ratfunc(b).scale(a)
    if isinstance(b, Fraction):
        return a.scale(b)
    return a * b


def _div(a, b):
    if isinstance(b, Fraction):
        if b == 0:
            raise ParseError("division by zero")
        return _mul(a, Fraction(1) / b)
    if b.is_zero:
        raise ParseError("division by the zero function")
    return _mul(a, b.inverse())


def _add(a, b):
    if isinstance(a, Fraction) and isinstance(b, Fraction):
        return a + b
    return _as_ratfunc(a) + _as_ratfunc(b)


def _neg(a):
    return -a


class _Parser:
    def __init__(self, tokens: list[tuple[str, str]]):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val!r}")

    def parse(self):
        value = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input near token {self.pos}")
        return value

    def expr(self):
        value = self.term()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = _add(value, _neg(rhs) if val == "-" else rhs)
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                rhs = self.unary()
                value = _mul(value, rhs) if val == "*" else _div(value, rhs)
            else:
                return value

    def unary(self):
        kind, val = self.peek()
        if kind == "op" and val == "-":
            self.take()
            return _neg(self.unary())
        return self.primary()

    def primary(self):
        value = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, exp = self.take()
            if kind != "int":
                raise ParseError("exponent must be a nonnegative integer")
            n = int(exp)
            if isinstance(value, Fraction):
                return value ** n
            return value ** n
        return value

    def atom(self):
        kind, val = self.take()
        if kind == "int":
            return Fraction(int(val))
        if kind == "var":
            return RatFunc.from_poly(Poly.monomial(val, 1))
        if kind == "op" and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected token {val!r}")


def parse_ratfunc(text: str) -> RatFunc:
    """Parse a rational function in up to two of the variables x, y, z, t, w."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty input")
    value = _Parser(tokens).parse()
    return _as_ratfunc(value)


def parse_poly(text: str, var: str | None = None) -> Poly:
    """Parse a univariate polynomial; optionally enforce its variable."""
    f = parse_ratfunc(text)
    num, den = f.expand_to_single_fraction(default_var=var or "z")
    if isinstance(num, BiPoly):
        raise ParseError("expected a univariate polynomial")
    if den.degree > 0:
        raise ParseError("expected a polynomial, found a denominator")
    p = num.scale(Fraction(1) / den.coeff(0))
    if var is not None and not p.is_zero and p.degree > 0 and p.var != var:
        raise ParseError(f"expected variable {var!r}, found {p.var!r}")
    if var is not None and p.var != var:
        p = Poly(var, p.coeffs)
    return p


def format_poly(p) -> str:
    """Canonical text for a Poly or BiPoly (round-trips through parse)."""
    return str(p)
