"""Exact-arithmetic toolkit for binomial convolutions of k-step Fibonacci
sequences: bivariate generating functions, diagonal extraction by residue
sums and by series/recurrence detection, and an identity verification suite.
"""

from .poly import BiPoly, Poly, Rational, poly_gcd, poly_xgcd
from .ratfunc import RatFunc, compose_rational, identity_equal
from .textform import ParseError, format_poly, parse_poly, parse_ratfunc
from .series import (
    PoleAtOriginError,
    SequenceSpec,
    Series,
    binomial_convolution,
    binomial_convolution_sequence,
    bivariate_series,
    convolution_grid,
    diagonal_series,
    generate_sequence,
    gf_of_sequence,
    kbonacci,
    series_of_rational,
)
from .recurrences import (
    AgreementReport,
    LinearRecurrence,
    certify_agreement,
    find_min_recurrence,
    recurrence_to_gf,
)
from .residues import (
    DegeneratePoleError,
    DiagnosticReport,
    HKTransform,
    PartialFractions,
    PoleClass,
    classify_poles,
    diagonal_rational,
    hk_transform,
    partial_fractions,
    residue_trace,
)
from .gfbuild import (
    CatalogEntry,
    ConvolutionGF,
    build_convolution_gf,
    catalog_entry,
    catalog_ids,
    printed_gf,
)
from .claims import Claim, ClaimReport, claim_ids, get_claim, run_all, run_claim

__version__ = "0.1.0"

__all__ = [
    "AgreementReport", "BiPoly", "CatalogEntry", "Claim", "ClaimReport",
    "ConvolutionGF", "DegeneratePoleError", "DiagnosticReport", "HKTransform",
    "LinearRecurrence", "ParseError", "PartialFractions", "PoleAtOriginError",
    "PoleClass", "Poly", "RatFunc", "Rational", "SequenceSpec", "Series",
    "binomial_convolution", "binomial_convolution_sequence", "bivariate_series",
    "build_convolution_gf", "catalog_entry", "catalog_ids", "certify_agreement",
    "claim_ids", "classify_poles", "compose_rational", "convolution_grid",
    "diagonal_rational", "diagonal_series", "find_min_recurrence", "format_poly",
    "generate_sequence", "get_claim", "gf_of_sequence", "hk_transform",
    "identity_equal", "kbonacci", "parse_poly", "parse_ratfunc",
    "partial_fractions", "poly_gcd", "poly_xgcd", "printed_gf",
    "recurrence_to_gf", "residue_trace", "run_all", "run_claim",
    "series_of_rational",
]
