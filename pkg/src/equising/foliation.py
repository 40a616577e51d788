"""Foliation germs ``P dx + Q dy = 0`` and their simple singularities.

The vector field attached to ``omega = P dx + Q dy`` is ``v = -Q d/dx + P d/dy``.
Singularities are classified from the linear part of ``v``: non-degenerate
(eigenvalue ratio outside Q+), saddle-node (one zero eigenvalue) or not
simple. Separatrices of simple singularities are computed as formal graphs
over an eigendirection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .algebra import (
    DEFAULT_ORDER,
    ONE,
    ZERO,
    BivariatePolynomial,
    GaussianRational,
    TruncatedSeries,
    series_compose,
    series_reverse,
)
from .errors import (
    IndexExceedsTruncation,
    IrrationalEigendirection,
    RecurrenceObstruction,
    ZeroForm,
)

Vector = tuple[GaussianRational, GaussianRational]


@dataclass(frozen=True)
class FoliationGerm:
    """``omega = P dx + Q dy`` with coprime ``P``, ``Q``."""

    P: BivariatePolynomial
    Q: BivariatePolynomial

    @property
    def nu(self) -> int:
        return algebraic_multiplicity(self)

    def is_singular(self) -> bool:
        return not self.P.constant_term() and not self.Q.constant_term()

    def translate(self, a, b) -> "FoliationGerm":
        return FoliationGerm(self.P.translate(a, b), self.Q.translate(a, b))

    def pullback(self, X: BivariatePolynomial, Y: BivariatePolynomial) -> "FoliationGerm":
        """The pulled-back form under ``(x, y) = (X(u, v), Y(u, v))``; not reduced."""
        Pp, Qp = self.P.substitute(X, Y), self.Q.substitute(X, Y)
        P1 = Pp * X.diff("x") + Qp * Y.diff("x")
        Q1 = Pp * X.diff("y") + Qp * Y.diff("y")
        return FoliationGerm(P1, Q1)

    def linear_map(self, M) -> "FoliationGerm":
        """Pull back along the linear map ``(x, y) = M (u, v)``."""
        (a, b), (c, d) = M
        return self.pullback(BivariatePolynomial.linear(a, b), BivariatePolynomial.linear(c, d))

    def linear_part(self) -> tuple[Vector, Vector]:
        """The matrix of the linear part of ``v = (-Q, P)`` at the origin."""
        return (
            (-self.Q.coeff(1, 0), -self.Q.coeff(0, 1)),
            (self.P.coeff(1, 0), self.P.coeff(0, 1)),
        )

    def axis_invariant(self, axis: str) -> bool:
        """Whether ``{axis = 0}`` is an invariant curve."""
        if axis == "x":
            return not any(self.Q.restrict("x"))
        return not any(self.P.restrict("y"))

    def __str__(self):
        return f"({self.P}) dx + ({self.Q}) dy"


class Kind(str, enum.Enum):
    REGULAR = "regular"
    NONDEGENERATE = "nondegenerate"
    SADDLE_NODE = "saddle-node"
    NOT_SIMPLE = "not-simple"


@dataclass(frozen=True)
class SingularityRecord:
    """Classification of a point of a chart.

    ``components`` maps a local axis name (``"x"`` for ``{x = 0}``) to the
    divisor component lying along it. For saddle-nodes ``weak_direction`` and
    ``strong_direction`` are tangent vectors in the chart, ``tangent`` tells
    whether the weak separatrix is a divisor component, and ``weak_component``
    names that component.
    """

    kind: Kind
    location: tuple = ()
    eigenvalues: tuple[GaussianRational, GaussianRational] | None = None
    ratio: GaussianRational | None = None
    weak_index: int | None = None
    weak_direction: Vector | None = None
    strong_direction: Vector | None = None
    tangent: bool = False
    weak_component: int | None = None
    components: tuple[int, ...] = ()

    @property
    def is_simple(self) -> bool:
        return self.kind in (Kind.NONDEGENERATE, Kind.SADDLE_NODE)


@dataclass(frozen=True)
class FormalSeparatrix:
    """A smooth invariant curve through the origin of a chart.

    ``parametrization`` is ``M (t, graph(t))`` where ``M`` (``frame``) has the
    tangent direction as first column.
    """

    parametrization: tuple[TruncatedSeries, TruncatedSeries]
    convergence: str = "analytic"
    frame: tuple[Vector, Vector] | None = None
    graph: TruncatedSeries | None = None

    @property
    def prec(self) -> int:
        return min(s.prec for s in self.parametrization)

    def graph_over_x(self) -> TruncatedSeries:
        """The separatrix as ``y = s(x)``; requires a non-vertical tangent."""
        x, y = self.parametrization
        return series_compose(y, series_reverse(x))

    def tangent(self) -> Vector:
        return self.frame[0][0], self.frame[1][0]


# -- basic operations ----------------------------------------------------------

def reduce_equation(P: BivariatePolynomial, Q: BivariatePolynomial) -> FoliationGerm:
    """Divide ``P dx + Q dy`` by ``gcd(P, Q)``."""
    if P.is_zero() and Q.is_zero():
        raise ZeroForm("the zero 1-form defines no foliation")
    g = P.gcd(Q)
    if g.degree() <= 0:
        return FoliationGerm(P, Q)
    return FoliationGerm(P.exquo(g), Q.exquo(g))


def algebraic_multiplicity(F: FoliationGerm) -> int:
    """``min(ord P, ord Q)``."""
    orders = [p.order() for p in (F.P, F.Q) if not p.is_zero()]
    return min(orders)


def _parallel(u: Vector, v: Vector) -> bool:
    return u[0] * v[1] - u[1] * v[0] == ZERO


def _eigenvector(A, lam: GaussianRational) -> Vector:
    (a, b), (c, d) = A
    if b:
        return (b, lam - a)
    if c:
        return (lam - d, c)
    return (ONE, ZERO) if lam == a else (ZERO, ONE)


def _eigenvalues(A) -> tuple[GaussianRational, GaussianRational] | None:
    """Both eigenvalues in Q(i), ordered by decreasing (re, im); None if irrational."""
    (a, b), (c, d) = A
    T = a + d
    D = a * d - b * c
    disc = T * T - 4 * D
    roots = disc.nth_roots(2)
    if not roots:
        return None
    r = roots[0]
    half = GaussianRational(1, 0) / 2
    l1, l2 = (T + r) * half, (T - r) * half
    return tuple(sorted((l1, l2), key=lambda z: (z.re, z.im), reverse=True))


def _axis_direction(axis: str) -> Vector:
    return (ZERO, ONE) if axis == "x" else (ONE, ZERO)


def classify_singularity(
    F: FoliationGerm,
    p=(0, 0),
    components: Mapping[str, int] | None = None,
    N: int = DEFAULT_ORDER,
) -> SingularityRecord:
    """Classify the point ``p`` of the chart carrying ``F``.

    ``components`` maps local axes through ``p`` (``"x"`` for ``{x = 0}``) to
    divisor component ids; it is used to flag tangent saddle-nodes.
    """
    components = dict(components or {})
    G = F.translate(*p) if any(GaussianRational.coerce(c) for c in p) else F
    comp_ids = tuple(sorted(components.values()))
    loc = tuple(GaussianRational.coerce(c) for c in p)
    if not G.is_singular():
        return SingularityRecord(Kind.REGULAR, loc, components=comp_ids)
    A = G.linear_part()
    (a, b), (c, d) = A
    T = a + d
    D = a * d - b * c
    if not any((a, b, c, d)):
        return SingularityRecord(Kind.NOT_SIMPLE, loc, components=comp_ids)
    if not D:
        if not T:
            return SingularityRecord(Kind.NOT_SIMPLE, loc, components=comp_ids)
        weak = _eigenvector(A, ZERO)
        strong = _eigenvector(A, T)
        tangent, weak_comp = False, None
        for axis, cid in components.items():
            if _parallel(weak, _axis_direction(axis)):
                tangent, weak_comp = True, cid
        # the order of Q~(u, s(u)) below u^n only depends on s mod u^n,
        # so a short expansion certifies small indices
        idx = None
        n = min(8, N)
        while n <= 8 * N:
            try:
                idx = weak_index(G, weak_separatrix(G, n))
                break
            except IndexExceedsTruncation:
                n *= 2
        if idx is None:
            raise IndexExceedsTruncation(f"weak index exceeds truncation order {n}")
        return SingularityRecord(
            Kind.SADDLE_NODE,
            loc,
            eigenvalues=(T, ZERO),
            weak_index=idx,
            weak_direction=weak,
            strong_direction=strong,
            tangent=tangent,
            weak_component=weak_comp,
            components=comp_ids,
        )
    eig = _eigenvalues(A)
    if eig is None:
        # irreducible characteristic polynomial: the ratio cannot lie in Q+
        return SingularityRecord(Kind.NONDEGENERATE, loc, components=comp_ids)
    ratio = eig[0] / eig[1]
    if ratio.is_real() and ratio.re > 0:
        return SingularityRecord(Kind.NOT_SIMPLE, loc, eigenvalues=eig, ratio=ratio, components=comp_ids)
    return SingularityRecord(Kind.NONDEGENERATE, loc, eigenvalues=eig, ratio=ratio, components=comp_ids)


# -- separatrices ------------------------------------------------------------

def _solve_linear(a: list, b: list, r: list, n: int) -> list:
    """delta with ``a*delta + b*delta' = r`` mod u^n, delta_0 = delta_1 = 0, b_0 = 0."""
    delta = [ZERO] * n
    a_nz = [(k, c) for k, c in enumerate(a[:n]) if c and k > 0]
    b_nz = [(k, c) for k, c in enumerate(b[: n + 1]) if c and k > 1]
    a0 = a[0] if a else ZERO
    b1 = b[1] if len(b) > 1 else ZERO
    for m in range(2, n):
        acc = r[m]
        for k, c in a_nz:
            if k > m - 2:
                break
            acc = acc - c * delta[m - k]
        for k, c in b_nz:
            j = m - k + 1
            if j < 2:
                break
            acc = acc - c * j * delta[j]
        pivot = a0 + b1 * m
        if not pivot:
            if acc:
                raise RecurrenceObstruction(f"zero pivot at order {m}")
            continue
        delta[m] = acc / pivot
    return delta


def _pad(s: TruncatedSeries, n: int) -> list:
    cs = list(s.coeffs[:n])
    return cs + [ZERO] * (n - len(cs))


def _graph_separatrix(Pt: BivariatePolynomial, Qt: BivariatePolynomial, N: int) -> TruncatedSeries:
    """Formal ``s`` with ``s(0) = s'(0) = 0`` and ``{v = s(u)}`` invariant for ``Pt du + Qt dv``.

    Newton iteration; each step solves the triangular recurrence whose pivot
    at order m is ``[v]Pt + m [u]Qt``.
    """
    Pv, Qv = Pt.diff("y"), Qt.diff("y")
    coeffs: list = []
    p = 2
    for _ in range(64):
        p = min(2 * p, N)
        U = TruncatedSeries.variable(p)
        S = TruncatedSeries(coeffs[:p], p)
        dS = S.derivative()
        Qs = Qt.eval_series(U, S)
        E = Pt.eval_series(U, S) + Qs * dS
        if p == N and E.prec >= N and E.is_zero():
            return S
        r = _pad(-E, p)
        if r[0] or r[1]:
            raise RecurrenceObstruction("tangency conditions violated; direction is not invariant")
        a = _pad(Pv.eval_series(U, S) + Qv.eval_series(U, S) * dS, p)
        b = _pad(Qs, p + 1)
        delta = _solve_linear(a, b, r, p)
        coeffs = [x + y for x, y in zip(_pad(S, p), delta)]
    raise RecurrenceObstruction("separatrix iteration did not converge")


def _frame_separatrix(G: FoliationGerm, first: Vector, second: Vector, N: int, convergence: str) -> FormalSeparatrix:
    M = ((first[0], second[0]), (first[1], second[1]))
    Gt = G.linear_map(M)
    s = _graph_separatrix(Gt.P, Gt.Q, N)
    u = TruncatedSeries.variable(N)
    x = u * M[0][0] + s * M[0][1]
    y = u * M[1][0] + s * M[1][1]
    return FormalSeparatrix((x, y), convergence, M, s)


def _saddle_node_directions(G: FoliationGerm) -> tuple[Vector, Vector]:
    A = G.linear_part()
    (a, _), (_, d) = A
    return _eigenvector(A, ZERO), _eigenvector(A, a + d)


def weak_separatrix(F: FoliationGerm, N: int = DEFAULT_ORDER) -> FormalSeparatrix:
    """The formal separatrix tangent to the kernel of a saddle-node at the origin."""
    weak, strong = _saddle_node_directions(F)
    return _frame_separatrix(F, weak, strong, N, "possibly-formal")


def strong_separatrix(F: FoliationGerm, N: int = DEFAULT_ORDER) -> FormalSeparatrix:
    weak, strong = _saddle_node_directions(F)
    return _frame_separatrix(F, strong, weak, N, "analytic")


def weak_index(F: FoliationGerm, sep: FormalSeparatrix) -> int:
    """Tangency order of a saddle-node along its weak separatrix.

    After straightening the weak separatrix to ``{v = 0}``, this is the order
    in ``u`` of the ``dv`` coefficient restricted to ``v = 0``.
    """
    Gt = F.linear_map(sep.frame)
    restricted = Gt.Q.eval_series(TruncatedSeries.variable(sep.graph.prec), sep.graph)
    o = restricted.order()
    if o is None:
        raise IndexExceedsTruncation(
            f"dv-coefficient vanishes through order {restricted.prec}; raise the truncation"
        )
    return o


def nondegenerate_separatrices(F: FoliationGerm, N: int = DEFAULT_ORDER) -> tuple[FormalSeparatrix, FormalSeparatrix]:
    """The two smooth transversal separatrices of a non-degenerate singularity."""
    A = F.linear_part()
    eig = _eigenvalues(A)
    if eig is None:
        raise IrrationalEigendirection(
            f"eigendirections of {F} are not Q(i)-rational", datum=str(F), degree=2
        )
    e1, e2 = _eigenvector(A, eig[0]), _eigenvector(A, eig[1])
    return (
        _frame_separatrix(F, e1, e2, N, "analytic"),
        _frame_separatrix(F, e2, e1, N, "analytic"),
    )


def separatrix_along(F: FoliationGerm, direction: Vector, N: int = DEFAULT_ORDER) -> FormalSeparatrix:
    """The separatrix of a simple singularity tangent to ``direction``."""
    A = F.linear_part()
    (a, b), (c, d) = A
    if not (a * d - b * c):
        weak, strong = _saddle_node_directions(F)
        if _parallel(direction, weak):
            return _frame_separatrix(F, weak, strong, N, "possibly-formal")
        return _frame_separatrix(F, strong, weak, N, "analytic")
    eig = _eigenvalues(A)
    if eig is None:
        raise IrrationalEigendirection(f"eigendirections of {F} are not Q(i)-rational", datum=str(F), degree=2)
    e1, e2 = _eigenvector(A, eig[0]), _eigenvector(A, eig[1])
    if _parallel(direction, e1):
        return _frame_separatrix(F, e1, e2, N, "analytic")
    return _frame_separatrix(F, e2, e1, N, "analytic")


def regular_leaf(F: FoliationGerm, N: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The leaf ``y = h(x)`` through a regular origin with ``Q(0, 0) != 0``.

    Newton iteration on ``P(x, h) + Q(x, h) h' = 0``; each linear step is
    triangular with pivot ``(m + 1) Q(0, 0)``.
    """
    q0 = F.Q.constant_term()
    if not q0:
        raise RecurrenceObstruction("the leaf is not a graph over x")
    Py, Qy = F.P.diff("y"), F.Q.diff("y")
    coeffs: list = [ZERO]
    p = 1
    for _ in range(64):
        p = min(2 * p, N)
        X = TruncatedSeries.variable(p)
        H = TruncatedSeries(coeffs[:p], p)
        dH = H.derivative()
        b = F.Q.eval_series(X, H)
        E = F.P.eval_series(X, H) + b * dH
        if p == N and E.is_zero():
            return H
        r = _pad(-E, p)
        a = _pad(Py.eval_series(X, H) + Qy.eval_series(X, H) * dH, p)
        bc = _pad(b, p)
        delta = [ZERO] * p
        for m in range(p - 1):
            acc = r[m]
            for k in range(0, m + 1):
                if a[k]:
                    acc = acc - a[k] * delta[m - k]
            for k in range(1, m + 1):
                if bc[k]:
                    acc = acc - bc[k] * (m - k + 1) * delta[m - k + 1]
            delta[m + 1] = acc / (q0 * (m + 1))
        coeffs = [u + v for u, v in zip(_pad(H, p), delta)]
    raise RecurrenceObstruction("leaf iteration did not converge")


def invariant_curve_test(F: FoliationGerm, gamma: tuple[TruncatedSeries, TruncatedSeries]) -> bool:
    """Whether ``P(gamma) gamma_1' + Q(gamma) gamma_2'`` vanishes through its certified order."""
    g1, g2 = gamma
    expr = F.P.eval_series(g1, g2) * g1.derivative() + F.Q.eval_series(g1, g2) * g2.derivative()
    return expr.is_zero()
