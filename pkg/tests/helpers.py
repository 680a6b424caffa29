"""Shared random generators for the property tests.

Everything is seeded so the suite is deterministic run to run.
"""

from fractions import Fraction
from random import Random

from gfdiag import BiPoly, Poly, RatFunc, SequenceSpec


def rand_fraction(rng: Random, lo: int = -5, hi: int = 5, denom: int = 3) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, denom))


def rand_poly(rng: Random, var: str = "z", max_deg: int = 4,
              nonzero: bool = False, nonzero_at_0: bool = False) -> Poly:
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-4, 4)) for _ in range(deg + 1)]
    if nonzero_at_0 and coeffs[0] == 0:
        coeffs[0] = Fraction(rng.choice([1, -1, 2, 3]))
    p = Poly(var, coeffs)
    if nonzero and p.is_zero:
        return Poly(var, [1] + coeffs[1:])
    return p


def rand_bipoly(rng: Random, outer: str = "x", inner: str = "y",
                max_deg: int = 2, nonzero_at_0: bool = False) -> BiPoly:
    rows = [rand_poly(rng, inner, max_deg) for _ in range(rng.randint(1, max_deg + 1))]
    p = BiPoly(outer, inner, rows)
    if p.is_zero:
        p = BiPoly.one(outer, inner)
    if nonzero_at_0 and p.coeff(0).coeff(0) == 0:
        p = p + BiPoly.one(outer, inner)
    return p


def rand_univariate_ratfunc(rng: Random, var: str = "z", n_denom: int = 2) -> RatFunc:
    """Random rational function expandable at the origin."""
    numer = [(rand_poly(rng, var, 3, nonzero=True), rng.randint(1, 2))]
    denom = [(rand_poly(rng, var, 3, nonzero_at_0=True), rng.randint(1, 2))
             for _ in range(rng.randint(1, n_denom))]
    constant = rand_fraction(rng)
    if constant == 0:
        constant = Fraction(1)
    return RatFunc(constant, numer, denom)


def rand_sequence_spec(rng: Random, max_order: int = 3,
                       unit_coeffs: bool = False) -> SequenceSpec:
    k = rng.randint(1, max_order)
    if unit_coeffs:
        coeffs = (Fraction(1),) * k
    else:
        coeffs = tuple(Fraction(rng.randint(-2, 2)) for _ in range(k))
        if all(c == 0 for c in coeffs):
            coeffs = (Fraction(1),) + coeffs[1:]
    initial = tuple(Fraction(rng.randint(-3, 3)) for _ in range(k))
    return SequenceSpec(k, coeffs, initial)
