"""Branches of plane curve germs.

Newton-Puiseux expansion over Q(i) (in Duval's rational form, so that the
only numbers ever needed are roots of edge polynomials), branch invariants,
intersection multiplicities, reparametrization of parametrized branches and
the equisingularity comparison of reduced curve germs.

A branch is stored as a parametrization ``(lead * t**n, sigma(t))``. When the
leading coefficient ``lead`` has an n-th root in Q(i) the variable is rescaled
so that ``lead == 1``, the classical normal form ``(t**n, sigma(t))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

from .algebra import (
    DEFAULT_ORDER,
    ONE,
    UNITS,
    ZERO,
    BivariatePolynomial,
    GaussianRational,
    TruncatedSeries,
    series_compose,
    series_mul,
    series_nth_root,
    series_reverse,
)
from .algebra.series import unit_root
from .algebra.univariate import factor_roots
from .errors import (
    DegenerateInput,
    NoMatchingUnit,
    NotOnBranch,
    NotSquareFree,
    TruncationTooCoarse,
    UnrepresentableCoefficient,
)


@dataclass(frozen=True, eq=False)
class PuiseuxBranch:
    """An irreducible curve germ at the origin.

    Parametrized as ``(lead * t**ramification, sigma(t))``, or as ``(0, t)``
    when ``tangent_vertical`` is set (the branch ``{x = 0}``).
    """

    ramification: int
    sigma: TruncatedSeries
    lead: GaussianRational = ONE
    tangent_vertical: bool = False

    @classmethod
    def vertical(cls, prec: int = DEFAULT_ORDER) -> "PuiseuxBranch":
        return cls(1, TruncatedSeries.variable(prec), ONE, True)

    @property
    def prec(self) -> int:
        return self.sigma.prec

    def parametrization(self, prec: int | None = None) -> tuple[TruncatedSeries, TruncatedSeries]:
        prec = self.sigma.prec if prec is None else prec
        if self.tangent_vertical:
            return TruncatedSeries.zero(prec), TruncatedSeries.variable(prec)
        big = max(prec, self.ramification + 1)
        return TruncatedSeries.monomial(self.lead, self.ramification, big), self.sigma

    @cached_property
    def multiplicity(self) -> int:
        if self.tangent_vertical:
            return 1
        o = self.sigma.order()
        return self.ramification if o is None else min(self.ramification, o)

    def is_smooth(self) -> bool:
        return self.multiplicity == 1

    @cached_property
    def char_exponents(self) -> tuple[Fraction, ...]:
        """Characteristic exponents computed in a transversal parametrization."""
        if self.tangent_vertical or self.multiplicity == 1:
            return ()
        n, sigma = self.ramification, self.sigma
        o = sigma.order()
        if o is not None and o < n:
            # tangent to the y-axis: exchange the coordinates first
            swapped, _ = puiseux_normalize((sigma, TruncatedSeries.monomial(self.lead, n, sigma.prec)))
            n, sigma = swapped.ramification, swapped.sigma
        return _characteristic(n, sigma)

    def tangent(self) -> tuple[GaussianRational, GaussianRational]:
        """A direction vector of the tangent line."""
        if self.tangent_vertical:
            return (ZERO, ONE)
        n, o = self.ramification, self.sigma.order()
        if o is None or o > n:
            return (ONE, ZERO)
        if o < n:
            return (ZERO, ONE)
        return (self.lead, self.sigma[o])

    def same_germ(self, other: "PuiseuxBranch") -> bool:
        """Structural identity through the common certified order."""
        return (
            self.tangent_vertical == other.tangent_vertical
            and self.ramification == other.ramification
            and self.lead == other.lead
            and self.sigma.agrees_with(other.sigma)
        )

    def __repr__(self):
        if self.tangent_vertical:
            return "PuiseuxBranch(x = 0)"
        x = f"t^{self.ramification}" if self.lead == ONE else f"({self.lead})*t^{self.ramification}"
        return f"PuiseuxBranch(({x}, {self.sigma!r}))"


def _characteristic(n: int, sigma: TruncatedSeries) -> tuple[Fraction, ...]:
    e, out = n, []
    for j, c in enumerate(sigma.coeffs):
        if e == 1:
            break
        if c and j % e:
            out.append(Fraction(j, n))
            e = gcd(e, j)
    if e != 1:
        raise TruncationTooCoarse(
            f"characteristic sequence of ramification {n} not closed below order {sigma.prec}"
        )
    return tuple(out)


@dataclass(frozen=True)
class CurveGerm:
    """A reduced curve germ: its branches and optionally a defining polynomial."""

    branches: tuple[PuiseuxBranch, ...]
    polynomial: BivariatePolynomial | None = None

    def __post_init__(self):
        object.__setattr__(self, "branches", tuple(self.branches))
        for a in range(len(self.branches)):
            for b in range(a + 1, len(self.branches)):
                if self.branches[a].same_germ(self.branches[b]):
                    raise DegenerateInput("curve germ has a repeated branch")

    @classmethod
    def from_polynomial(cls, F: BivariatePolynomial, N: int = DEFAULT_ORDER) -> "CurveGerm":
        return newton_puiseux(F, N)

    @property
    def multiplicity(self) -> int:
        return sum(b.multiplicity for b in self.branches)

    def __len__(self):
        return len(self.branches)


@dataclass(frozen=True)
class EquisingularityType:
    char_exponents: tuple[tuple[Fraction, ...], ...]
    intersections: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CurveComparison:
    equisingular: bool
    bijection: tuple[int, ...] | None = None
    reason: str | None = None

    def __bool__(self):
        return self.equisingular


# -- Newton-Puiseux -----------------------------------------------------------

@dataclass
class _Chart:
    """Current substitution ``x = mu X**n``, ``y = A(X) + b X**e Y``."""

    mu: GaussianRational = ONE
    n: int = 1
    A: dict = field(default_factory=dict)
    b: GaussianRational = ONE
    e: int = 0

    def step(self, xi: GaussianRational, q: int, m: int, u: int, v: int) -> "_Chart":
        # X = xi^v X1^q, Y = X1^m (xi^u + Y1)
        s = xi ** v
        newA = {}
        for k, c in self.A.items():
            newA[k * q] = newA.get(k * q, ZERO) + c * s ** k
        b1 = self.b * s ** self.e
        e1 = self.e * q + m
        newA[e1] = newA.get(e1, ZERO) + b1 * xi ** u
        return _Chart(self.mu * s ** self.n, self.n * q, newA, b1, e1)


def _lower_hull(points: list[tuple[int, int]]) -> list[tuple[int, int]]:
    pts = sorted(set(points))
    hull: list[tuple[int, int]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) <= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    return hull


def _solve_implicit(G: BivariatePolynomial, prec: int) -> TruncatedSeries:
    """The series ``s`` with ``G(X, s(X)) = 0``, ``s(0) = 0``, by Newton iteration."""
    dGdY = G.diff("y")
    coeffs: list = []
    p = 1
    while True:
        p = min(2 * p, prec)
        # the previous iterate, padded with zeros, is an approximation mod t^p
        s = TruncatedSeries(coeffs, p)
        X = TruncatedSeries.variable(p)
        s = s - G.eval_series(X, s) / dGdY.eval_series(X, s)
        coeffs = list(s.coeffs)
        if p == prec and s.prec >= prec:
            break
    s = TruncatedSeries(coeffs[:prec], prec)
    if not G.eval_series(TruncatedSeries.variable(prec), s).is_zero():
        raise ArithmeticError("implicit function iteration failed to converge")
    return s


def _edge_roots(coeffs: list) -> list[tuple[GaussianRational, int]]:
    roots, nonlinear = factor_roots(coeffs)
    if nonlinear:
        deg = max(d for d, _ in nonlinear)
        poly = " + ".join(f"({c})*T^{k}" for k, c in enumerate(coeffs) if c)
        raise UnrepresentableCoefficient(
            f"edge polynomial {poly} has roots outside Q(i) (extension degree {deg})",
            datum=poly,
            degree=deg,
        )
    return [(r, m) for r, m in roots if r]


def _expand(G: BivariatePolynomial, chart: _Chart, N: int, out: list):
    ky = G.power_dividing("y")
    if ky:
        if ky > 1:
            raise NotSquareFree("repeated branch met during Newton-Puiseux expansion")
        out.append((chart, None))
        G = G.divide_monomial(0, 1)
    r0 = G.restrict("x")
    r = next((j for j, c in enumerate(r0) if c), 0)
    if r == 0:
        return
    if r == 1:
        prec = N + max(chart.n, 1)
        out.append((chart, _solve_implicit(G, prec)))
        return
    pts = [(j, i) for (i, j) in G.terms if j <= r]
    hull = _lower_hull(pts)
    start = next(k for k, p in enumerate(hull) if p[0] == 0)
    end = next(k for k, p in enumerate(hull) if p == (r, 0))
    for (j0, i0), (j1, i1) in zip(hull[start:end], hull[start + 1 : end + 1]):
        di, dj = i0 - i1, j1 - j0
        g = gcd(di, dj)
        m, q = di // g, dj // g
        L = q * i0 + m * j0
        phi = [ZERO] * (dj // q + 1)
        for (i, j), c in G.terms.items():
            if q * i + m * j == L:
                phi[(j - j0) // q] = phi[(j - j0) // q] + c
        u = next(u for u in range(1, m + 1) if (u * q) % m == 1 % m)
        v = (u * q - 1) // m
        for xi, _mult in _edge_roots(phi):
            X = BivariatePolynomial.monomial(xi ** v, q, 0)
            Y = BivariatePolynomial({(m, 0): xi ** u, (m, 1): ONE})
            G1 = G.substitute(X, Y).divide_monomial(L, 0)
            _expand(G1, chart.step(xi, q, m, u, v), N, out)


def _branch_from_chart(chart: _Chart, s: TruncatedSeries | None, N: int) -> PuiseuxBranch:
    prec = N + chart.n
    y = TruncatedSeries.from_dict(chart.A, prec)
    if s is not None:
        y = y + series_mul(TruncatedSeries.monomial(chart.b, chart.e, prec), s)
    roots = chart.mu.nth_roots(chart.n)
    if roots:
        y = y.scale_variable(roots[0].inverse())
        lead = ONE
    else:
        lead = chart.mu
    return PuiseuxBranch(chart.n, y.truncate(min(y.prec, prec)), lead)


def newton_puiseux(F: BivariatePolynomial, N: int = DEFAULT_ORDER) -> CurveGerm:
    """All branches of ``{F = 0}`` at the origin.

    Every emitted branch satisfies ``F(lead*t**n, sigma(t)) = 0`` modulo
    ``t**N``.

    Raises
    ------
    NotSquareFree
        if F has a repeated factor.
    UnrepresentableCoefficient
        if a Puiseux coefficient would leave Q(i); the report names the edge
        polynomial and the extension degree.
    """
    if F.is_zero():
        raise DegenerateInput("zero polynomial defines no curve")
    if F.constant_term():
        raise DegenerateInput("curve does not pass through the origin")
    if not F.is_square_free():
        raise NotSquareFree(f"{F} is not square-free")
    branches: list[PuiseuxBranch] = []
    G = F
    if G.power_dividing("x"):
        branches.append(PuiseuxBranch.vertical(N + 1))
        G = G.divide_monomial(1, 0)
    found: list = []
    _expand(G, _Chart(), N, found)
    for chart, s in found:
        branches.append(_branch_from_chart(chart, s, N))
    return CurveGerm(tuple(branches), F)


# -- reparametrization -------------------------------------------------------

def puiseux_normalize(
    gamma: tuple[TruncatedSeries, TruncatedSeries],
) -> tuple[PuiseuxBranch, TruncatedSeries]:
    """Reparametrize ``gamma = (f, g)`` into branch form.

    Returns ``(branch, psi)`` with ``gamma(psi(x)) = (lead * x**nu, sigma(x))``
    where ``nu = ord f``. ``lead`` is 1 whenever the leading coefficient of
    ``f`` has a nu-th root in Q(i).
    """
    f, g = gamma
    nu = f.order()
    if nu is None:
        raise DegenerateInput("first component vanishes through its certified order")
    if nu == 0:
        raise DegenerateInput("parametrization does not pass through the origin")
    a = f.coeffs[nu]
    unit = (f * a.inverse()).shift(-nu)
    w = unit_root(unit, nu).shift(1) if nu > 1 else f * a.inverse()
    psi = series_reverse(w)
    roots = a.nth_roots(nu)
    if roots:
        psi = psi.scale_variable(roots[0].inverse())
        lead = ONE
    else:
        lead = a
    sigma = series_compose(g, psi)
    n, sigma = _reduce_primitive(nu, sigma)
    return PuiseuxBranch(n, sigma, lead), psi


def _reduce_primitive(n: int, sigma: TruncatedSeries) -> tuple[int, TruncatedSeries]:
    d = n
    for j, c in enumerate(sigma.coeffs):
        if c:
            d = gcd(d, j)
    if d <= 1:
        return n, sigma
    keep = [sigma.coeffs[j] for j in range(0, sigma.prec, d)]
    return n // d, TruncatedSeries(keep, len(keep))


def branch_factor(
    F: BivariatePolynomial, f: TruncatedSeries, g: TruncatedSeries, N: int | None = None
) -> TruncatedSeries:
    """Write a parametrization lying on the irreducible curve ``F = 0`` as
    ``(f, g) = (lead * psi**n, sigma(psi))``.

    The root of unity relating ``psi`` to the principal n-th root of
    ``f / lead`` is searched among the units of Q(i).
    """
    prec = min(f.prec, g.prec)
    germ = newton_puiseux(F, N or prec + 8)
    if len(germ.branches) != 1:
        raise DegenerateInput(f"{F} has {len(germ.branches)} branches at the origin")
    branch = germ.branches[0]
    residual = F.eval_series(f, g)
    if not residual.is_zero():
        raise NotOnBranch(f"F(f, g) has a nonzero coefficient at t^{residual.order()}")
    if f.is_zero() and g.is_zero():
        raise DegenerateInput("(f, g) vanishes through its certified order")
    if branch.tangent_vertical:
        return g
    phi = series_nth_root(f * branch.lead.inverse(), branch.ramification)
    for xi in UNITS:
        if xi ** branch.ramification != ONE:
            continue
        psi = phi * xi
        if series_compose(branch.sigma, psi).agrees_with(g):
            return psi
    raise NoMatchingUnit(
        "no root of unity in Q(i) relates the principal root to the given parametrization",
        datum=repr(branch),
        degree=branch.ramification,
    )


# -- intersection multiplicity ----------------------------------------------

def branch_equation(A: PuiseuxBranch) -> list[TruncatedSeries]:
    """Coefficients ``c_0..c_n`` (series in x) of the monic equation
    ``prod_k (y - y_k(x)) = sum c_j(x) y**j`` over the conjugates of ``A``.

    The power sums of the conjugates only keep the exponents of ``t`` that
    are multiples of ``n``, so the product has Q(i) coefficients even when
    the individual conjugates do not.
    """
    if A.tangent_vertical:
        raise ValueError("the vertical branch has equation x = 0")
    n, sigma = A.ramification, A.sigma
    px = (sigma.prec + n - 1) // n
    ainv = A.lead.inverse()
    power_sums = []
    ym = None
    for _ in range(n):
        ym = sigma if ym is None else series_mul(ym, sigma)
        cs = [ZERO] * px
        for k in range(px):
            e = n * k
            if e < ym.prec and ym.coeffs[e]:
                cs[k] = ym.coeffs[e] * n * ainv ** k
        power_sums.append(TruncatedSeries(cs, min(px, (ym.prec + n - 1) // n)))
    elem = [TruncatedSeries.one(px)]
    for k in range(1, n + 1):
        acc = TruncatedSeries.zero(px)
        for i in range(1, k + 1):
            term = series_mul(elem[k - i], power_sums[i - 1])
            acc = acc + term if i % 2 else acc - term
        elem.append(acc * GaussianRational(Fraction(1, k)))
    # prod (y - y_k) = sum_k (-1)^k e_k y^(n-k)
    coeffs = [None] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = elem[k] if k % 2 == 0 else -elem[k]
    return coeffs


def intersection_multiplicity(A: PuiseuxBranch, B: PuiseuxBranch) -> int | float:
    """Intersection number of two branches; ``math.inf`` for identical branches.

    Raises
    ------
    TruncationTooCoarse
        if the contact is not decided below the certified order.
    """
    if A.same_germ(B):
        return math.inf
    if A.tangent_vertical and B.tangent_vertical:
        return math.inf
    if A.tangent_vertical:
        A, B = B, A
    coeffs = branch_equation(A)
    if B.tangent_vertical:
        # G_A(0, t): the first coefficient with a nonzero constant term
        return next(j for j, c in enumerate(coeffs) if c.prec and c.coeffs[0])
    bx, by = B.parametrization()
    acc = None
    ypow = None
    for j, c in enumerate(coeffs):
        cx = series_compose(c, bx)
        if j > 0:
            ypow = by if ypow is None else series_mul(ypow, by)
            cx = series_mul(cx, ypow)
        acc = cx if acc is None else acc + cx
    o = acc.order()
    if o is None:
        raise TruncationTooCoarse(
            f"intersection multiplicity exceeds the certified order {acc.prec}; raise the truncation"
        )
    return o


def equisingularity_type(C: CurveGerm) -> EquisingularityType:
    k = len(C.branches)
    mat = [[0] * k for _ in range(k)]
    for a in range(k):
        for b in range(a + 1, k):
            mat[a][b] = mat[b][a] = intersection_multiplicity(C.branches[a], C.branches[b])
    return EquisingularityType(
        tuple(b.char_exponents for b in C.branches), tuple(tuple(r) for r in mat)
    )


def equisingular_curves(C: CurveGerm, D: CurveGerm) -> CurveComparison:
    """Decide equisingularity of two reduced curve germs.

    Two germs are equisingular iff some bijection of branches preserves the
    characteristic exponents of each branch and all pairwise intersection
    numbers. On success the witness maps branch ``k`` of ``C`` to branch
    ``bijection[k]`` of ``D``.
    """
    if len(C.branches) != len(D.branches):
        return CurveComparison(False, reason=f"branch counts differ ({len(C.branches)} vs {len(D.branches)})")
    tc, td = equisingularity_type(C), equisingularity_type(D)
    if sorted(tc.char_exponents) != sorted(td.char_exponents):
        return CurveComparison(False, reason="char exponents differ")
    k = len(C.branches)
    candidates = [[j for j in range(k) if td.char_exponents[j] == tc.char_exponents[a]] for a in range(k)]
    assign: list[int] = []
    used = [False] * k

    def extend(a: int) -> bool:
        if a == k:
            return True
        for j in candidates[a]:
            if used[j]:
                continue
            if all(tc.intersections[a][b] == td.intersections[j][assign[b]] for b in range(a)):
                used[j] = True
                assign.append(j)
                if extend(a + 1):
                    return True
                assign.pop()
                used[j] = False
        return False

    if extend(0):
        return CurveComparison(True, bijection=tuple(assign))
    return CurveComparison(False, reason="intersection multiplicities differ")
