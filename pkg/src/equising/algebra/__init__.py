"""Exact arithmetic over Q(i): scalars, bivariate polynomials, truncated series."""

from .gaussian import GaussianRational, I, ONE, UNITS, ZERO
from .polynomial import BivariatePolynomial, poly_order
from .series import (
    DEFAULT_ORDER,
    TruncatedSeries,
    series_compose,
    series_div,
    series_mul,
    series_nth_root,
    series_pow,
    series_reverse,
)

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "UNITS",
    "ZERO",
    "BivariatePolynomial",
    "poly_order",
    "DEFAULT_ORDER",
    "TruncatedSeries",
    "series_compose",
    "series_div",
    "series_mul",
    "series_nth_root",
    "series_pow",
    "series_reverse",
]
