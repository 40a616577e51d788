"""A fixed catalog of germs and a generator of random reducible germs."""

from __future__ import annotations

import random

from .algebra import BivariatePolynomial, GaussianRational
from .foliation import FoliationGerm, reduce_equation
from .germfile import parse_polynomial

CATALOG_SOURCE = {
    "cusp": ("3*x^2", "-2*y"),
    "radial": ("-y", "x"),
    "tangent_saddle_node": ("y^2 - x*y", "x^2"),
    "euler": ("y - x", "-x^2"),
}

CURVES_SOURCE = {
    "cusp": "y^2 - x^3",
    "cusp_perturbed": "y^2 - x^3 - x^4",
    "a4": "y^2 - x^5",
    "node": "x*y",
    "node_rotated": "y^2 - x^2",
    "e6": "y^3 - x^4",
    "tacnode": "y^2 - x^4",
    "two_cusps": "y^4 - x^6 + x^5*y",
    "double_cusp": "y^4 - 2*x^3*y^2 + x^6 - x^7",
    "smooth": "y - x^2",
}


def catalog() -> dict[str, FoliationGerm]:
    return {
        name: reduce_equation(parse_polynomial(p), parse_polynomial(q))
        for name, (p, q) in CATALOG_SOURCE.items()
    }


def curve_catalog() -> dict[str, BivariatePolynomial]:
    return {name: parse_polynomial(f) for name, f in CURVES_SOURCE.items()}


def _coeff(rng: random.Random, gaussian: bool = False) -> GaussianRational:
    re = rng.randint(-3, 3)
    im = rng.randint(-2, 2) if gaussian and rng.random() < 0.3 else 0
    return GaussianRational(re, im)


def _homogeneous(rng: random.Random, d: int, gaussian: bool) -> BivariatePolynomial:
    return BivariatePolynomial({(i, d - i): _coeff(rng, gaussian) for i in range(d + 1)})


def random_germ(rng: random.Random, max_degree: int = 4, gaussian: bool = True) -> FoliationGerm:
    """A random singular germ of degree at most ``max_degree``.

    The tangent cone ``x P_nu + y Q_nu`` is either zero (dicritical first
    blow-up) or a product of rational linear forms, so the first blow-up has
    Q(i)-rational singular points; deeper levels may still leave Q(i), which
    callers treat as a field-policy skip.
    """
    x, y = BivariatePolynomial.x(), BivariatePolynomial.y()
    while True:
        nu = rng.randint(1, max_degree - 1)
        if rng.random() < 0.25:
            H = _homogeneous(rng, nu - 1, gaussian)
            if H.is_zero():
                continue
            P, Q = -(y * H), x * H
        else:
            L = BivariatePolynomial.const(rng.choice([1, 1, 2, -1]))
            for _ in range(nu + 1):
                if rng.random() < 0.15:
                    L = L * x
                else:
                    L = L * (y - x * rng.randint(-3, 3))
            Q = _homogeneous(rng, nu, gaussian)
            Q = Q + BivariatePolynomial.monomial(L.coeff(0, nu + 1) - Q.coeff(0, nu), 0, nu)
            P = (L - y * Q).divide_monomial(1, 0)
        for d in range(nu + 1, max_degree + 1):
            if rng.random() < 0.6:
                P = P + _homogeneous(rng, d, gaussian)
            if rng.random() < 0.6:
                Q = Q + _homogeneous(rng, d, gaussian)
        if P.is_zero() and Q.is_zero():
            continue
        F = reduce_equation(P, Q)
        if F.is_singular():
            return F
