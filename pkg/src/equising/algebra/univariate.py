"""Univariate root finding over Q(i), plus the sympy bridge used for gcds.

Only factorization and gcd are delegated to sympy's ``QQ_I`` domain; the
results are converted straight back to :class:`GaussianRational`.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import sympy

from .gaussian import GaussianRational, ZERO

_X, _Y, _T = sympy.symbols("x y t")


def to_sympy(c: GaussianRational):
    return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
        c.im.numerator, c.im.denominator
    )


def _frac(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def from_domain(e) -> GaussianRational:
    """Convert an element of sympy's QQ_I (or ZZ_I) domain."""
    return GaussianRational(_frac(e.x), _frac(e.y))


def _poly_from_coeffs(coeffs):
    terms = {(k,): to_sympy(c) for k, c in enumerate(coeffs) if c}
    return sympy.Poly.from_dict(terms, _T, domain="QQ_I")


@lru_cache(maxsize=2048)
def _factor_cached(coeffs: tuple) -> tuple:
    poly = _poly_from_coeffs(coeffs)
    _, factors = poly.factor_list()
    linear, nonlinear = [], []
    for f, mult in factors:
        if f.degree() == 1:
            c1, c0 = [from_domain(e) for e in f.rep.to_list()]
            linear.append((-c0 / c1, mult))
        else:
            nonlinear.append((f.degree(), mult))
    linear.sort(key=lambda rm: (rm[0].re, rm[0].im))
    return tuple(linear), tuple(nonlinear)


def factor_roots(coeffs) -> tuple[list, list]:
    """Roots in Q(i) of ``sum coeffs[k] t**k``.

    Returns ``(roots, nonlinear)`` where ``roots`` lists ``(root, multiplicity)``
    sorted by (real, imaginary) part and ``nonlinear`` lists ``(degree,
    multiplicity)`` of the irreducible factors of degree > 1 over Q(i).
    """
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    if len(coeffs) <= 1:
        return [], []
    lin, non = _factor_cached(tuple(GaussianRational.coerce(c) for c in coeffs))
    return list(lin), list(non)


def roots_in_qi(coeffs) -> tuple[list, list]:
    """Distinct Q(i) roots and the degrees of the remaining irreducible factors."""
    lin, non = factor_roots(coeffs)
    return [r for r, _ in lin], [d for d, _ in non]


def evaluate(coeffs, t) -> GaussianRational:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc
