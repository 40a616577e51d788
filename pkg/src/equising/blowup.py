"""Punctual blow-ups, strict transforms and exceptional divisor bookkeeping.

A blow-up of a point ``p`` is described in two charts of the new component
``E``: chart 1 with coordinates ``(x, t)`` and ``y = x t`` (there ``E = {x = 0}``)
and chart 2 with coordinates ``(s, y)`` and ``x = s y`` (there ``E = {y = 0}``).
Only the origin of chart 2 is not visible in chart 1.

The model keeps a set of *sites*: points of the current divisor that need
attention (singular points, tangency points, corners, points where tracked
curve branches land). Each site carries its local germ, the components along
its coordinate axes and the polynomial map to the original coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    DEFAULT_ORDER,
    ONE,
    ZERO,
    BivariatePolynomial,
    GaussianRational,
    TruncatedSeries,
    series_div,
)
from .algebra.univariate import roots_in_qi
from .errors import FieldPolicyError, TruncationTooCoarse
from .foliation import FoliationGerm, regular_leaf

Param = tuple[TruncatedSeries, TruncatedSeries]

_X = BivariatePolynomial.x()
_Y = BivariatePolynomial.y()


@dataclass
class DivisorComponent:
    """A component of the exceptional divisor.

    ``parents`` lists the components through the blown-up point (the arrow
    targets of the dual tree); ``chart_map`` and ``chart_germ`` describe the
    component in its own chart 1, where it is ``{x = 0}``.
    """

    id: int
    self_int: int = -1
    rho: int = 1
    dicritical: bool = False
    parents: tuple[int, ...] = ()
    birth: int = 0
    depth: int = 1
    chart_map: tuple[BivariatePolynomial, BivariatePolynomial] | None = None
    chart_germ: FoliationGerm | None = None
    special_points: tuple[GaussianRational, ...] = ()

    @property
    def parent(self) -> int | None:
        return self.parents[0] if self.parents else None


@dataclass
class Site:
    """A point of the divisor with its local data.

    ``axes`` maps ``"x"`` (for ``{x = 0}``) and ``"y"`` to the components along
    the local axes. ``location`` is ``(component id, t)`` with ``t = None`` for
    the origin of chart 2; the initial site is ``(0, None)``.
    """

    id: int
    germ: FoliationGerm | None
    axes: dict[str, int]
    to_origin: tuple[BivariatePolynomial, BivariatePolynomial]
    depth: int = 0
    location: tuple = (0, None)
    branches: dict[int, Param] = field(default_factory=dict)

    @property
    def is_corner(self) -> bool:
        return len(self.axes) == 2

    def sort_key(self):
        cid, t = self.location
        return (cid, 1 if t is None else 0, t.sort_key() if t is not None else ())

    def label(self) -> str:
        cid, t = self.location
        if cid == 0:
            return "origin"
        return f"E{cid}:" + ("inf" if t is None else f"t={t}")


@dataclass
class BlowUpResult:
    chart1: FoliationGerm | None
    chart2: FoliationGerm | None
    component: DivisorComponent
    children: list[int]


class ExceptionalModel:
    """Components of the exceptional divisor plus the sites on it."""

    def __init__(self, germ: FoliationGerm | None = None, branches: dict[int, Param] | None = None):
        self.germ = germ
        self.components: dict[int, DivisorComponent] = {}
        self.sites: dict[int, Site] = {}
        self.blowups = 0
        self.history: list[str] = []
        self._next_site = 0
        self._add_site(germ, {}, (_X, _Y), 0, (0, None), dict(branches or {}))

    def _add_site(self, germ, axes, to_origin, depth, location, branches) -> int:
        sid = self._next_site
        self._next_site += 1
        self.sites[sid] = Site(sid, germ, dict(axes), to_origin, depth, location, branches)
        return sid

    def ordered_sites(self) -> list[Site]:
        return sorted(self.sites.values(), key=Site.sort_key)

    def corners(self) -> list[tuple[int, int]]:
        out = set()
        for s in self.sites.values():
            if s.is_corner:
                out.add(tuple(sorted(s.axes.values())))
        return sorted(out)

    def neighbours(self, cid: int) -> set[int]:
        """Components meeting ``cid`` in the current divisor."""
        out = set()
        for a, b in self.corners():
            if a == cid:
                out.add(b)
            elif b == cid:
                out.add(a)
        return out

    def component_list(self) -> list[DivisorComponent]:
        return [self.components[k] for k in sorted(self.components)]

    def self_intersection_deficit(self) -> int:
        return sum(-1 - c.self_int for c in self.components.values())


# -- foliation transforms -------------------------------------------------------

def dicritical_test(F: FoliationGerm) -> bool:
    """Whether the first blow-up of ``F`` produces a non-invariant component.

    True iff ``x P_nu + y Q_nu`` vanishes identically.
    """
    nu = F.nu
    cone = _X * F.P.homogeneous_part(nu) + _Y * F.Q.homogeneous_part(nu)
    return cone.is_zero()


def _divide(F: FoliationGerm, i: int, j: int) -> FoliationGerm:
    return FoliationGerm(F.P.divide_monomial(i, j), F.Q.divide_monomial(i, j))


def blow_up_charts(F: FoliationGerm) -> tuple[FoliationGerm, FoliationGerm, bool]:
    """Strict transforms of ``F`` in both charts and the dicritical flag."""
    dic = dicritical_test(F)
    k = F.nu + 1 if dic else F.nu
    G1 = _divide(F.pullback(_X, _X * _Y), k, 0)
    G2 = _divide(F.pullback(_X * _Y, _Y), 0, k)
    return G1, G2, dic


def _special_parameters(G1: FoliationGerm, dicritical: bool) -> list[GaussianRational]:
    """Points ``t`` of ``E = {x = 0}`` in chart 1 that need examination."""
    coeffs = (G1.Q if dicritical else G1.P).restrict("x")
    if len(coeffs) <= 1:
        return []
    roots, others = roots_in_qi(coeffs)
    if others:
        poly = " + ".join(f"({c})*t^{k}" for k, c in enumerate(coeffs) if c)
        raise FieldPolicyError(
            f"points of the exceptional divisor are not Q(i)-rational: roots of {poly}",
            datum=poly,
            degree=max(others),
        )
    return roots


# -- curves ------------------------------------------------------------------

def _ord(s: TruncatedSeries) -> float:
    o = s.order()
    return float("inf") if o is None else o


def strict_transform_curve(gamma: Param) -> tuple[str, GaussianRational | None, Param]:
    """Strict transform of a parametrized germ through the blown-up origin.

    Returns ``(chart, t0, gamma')``: for ``chart == "1"`` the transform meets
    the new component at ``t = t0`` and ``gamma'`` is written in coordinates
    ``(x, t - t0)``; for ``chart == "2"`` it passes through the origin of
    chart 2 (``t0`` is None).
    """
    g1, g2 = gamma
    if _ord(g1) == float("inf") and _ord(g2) == float("inf"):
        raise TruncationTooCoarse("curve germ vanishes through its certified order")
    if _ord(g1) <= _ord(g2):
        q = series_div(g2, g1)
        if q.prec < 1:
            raise TruncationTooCoarse("quotient has no certified coefficient")
        t0 = q[0]
        return "1", t0, (g1, q - TruncatedSeries.monomial(t0, 0, q.prec) if t0 else q)
    q = series_div(g1, g2)
    if q.prec < 1:
        raise TruncationTooCoarse("quotient has no certified coefficient")
    return "2", None, (q, g2)


def blow_down_compose(gamma: Param, to_origin: tuple[BivariatePolynomial, BivariatePolynomial]) -> Param:
    """Push a parametrized germ in a chart down to the original plane."""
    X, Y = to_origin
    g1, g2 = gamma
    return X.eval_series(g1, g2), Y.eval_series(g1, g2)


def _branch_multiplicity(gamma: Param) -> float:
    return min(_ord(gamma[0]), _ord(gamma[1]))


def branch_needs_blowup(site: Site, gamma: Param) -> bool:
    """A tracked branch is resolved at a site iff smooth, at a trace point and transverse."""
    if _branch_multiplicity(gamma) != 1:
        return True
    if site.is_corner:
        return True
    o1, o2 = _ord(gamma[0]), _ord(gamma[1])
    # tangent along {x = 0} when x vanishes to higher order, and symmetrically
    if "x" in site.axes and o1 > o2:
        return True
    if "y" in site.axes and o2 > o1:
        return True
    return False


# -- the blow-up itself ---------------------------------------------------------

def blow_up(model: ExceptionalModel, site_id: int) -> BlowUpResult:
    """Blow up the point of ``model`` carried by ``site_id`` and update the model."""
    site = model.sites.pop(site_id)
    through = sorted(site.axes.values())
    for cid in through:
        model.components[cid].self_int -= 1
    rho = max(1, sum(model.components[c].rho for c in through))
    model.blowups += 1
    cid = max(model.components, default=0) + 1
    G1 = G2 = None
    dic = False
    if site.germ is not None:
        G1, G2, dic = blow_up_charts(site.germ)
    X, Y = site.to_origin
    map1 = (X.substitute(_X, _X * _Y), Y.substitute(_X, _X * _Y))
    map2 = (X.substitute(_X * _Y, _Y), Y.substitute(_X * _Y, _Y))

    points: dict = {}
    if "y" in site.axes:
        points[ZERO] = {}
    if G1 is not None:
        for t0 in _special_parameters(G1, dic):
            points.setdefault(t0, {})
    at_infinity: dict[int, Param] = {}
    for bid, gamma in site.branches.items():
        chart, t0, g = strict_transform_curve(gamma)
        if chart == "1":
            points.setdefault(t0, {})[bid] = g
        else:
            at_infinity[bid] = g

    comp = DivisorComponent(
        id=cid,
        rho=rho,
        dicritical=dic,
        parents=tuple(through),
        birth=model.blowups,
        depth=site.depth + 1,
        chart_map=map1,
        chart_germ=G1,
        special_points=tuple(sorted(points, key=GaussianRational.sort_key)),
    )
    model.components[cid] = comp
    model.history.append(site.label())

    children = []
    for t0 in sorted(points, key=GaussianRational.sort_key):
        axes = {"x": cid}
        if t0 == ZERO and "y" in site.axes:
            axes["y"] = site.axes["y"]
        if t0:
            shifted = _X * (_Y + t0)
            to_origin = (X.substitute(_X, shifted), Y.substitute(_X, shifted))
            germ = G1.translate(0, t0) if G1 is not None else None
        else:
            to_origin, germ = map1, G1
        children.append(model._add_site(germ, axes, to_origin, site.depth + 1, (cid, t0), points[t0]))
    axes2 = {"y": cid}
    if "x" in site.axes:
        axes2["x"] = site.axes["x"]
    children.append(model._add_site(G2, axes2, map2, site.depth + 1, (cid, None), at_infinity))
    return BlowUpResult(G1, G2, comp, children)


def free_points(comp: DivisorComponent, count: int, avoid=()) -> list[GaussianRational]:
    """``count`` points ``t = 1, 2, ...`` of the chart of ``comp`` avoiding special points."""
    taken = set(comp.special_points) | set(avoid)
    out = []
    k = 1
    while len(out) < count:
        t = GaussianRational(k)
        if t not in taken:
            out.append(t)
        k += 1
    return out


def curvette(comp: DivisorComponent, t0: GaussianRational, N: int = DEFAULT_ORDER) -> Param:
    """The pushed-down curve ``{t = t0}`` of the chart of ``comp``."""
    tau = TruncatedSeries.variable(N)
    const = TruncatedSeries.monomial(GaussianRational.coerce(t0), 0, N)
    return blow_down_compose((tau, const), comp.chart_map)


def leaf_through(comp: DivisorComponent, t0: GaussianRational, N: int = DEFAULT_ORDER) -> Param:
    """The leaf through the free point ``t0`` of a dicritical component, pushed down.

    Locally the leaf is a graph ``t = t0 + h(x)`` since ``Q(0, t0) != 0``.
    """
    G = comp.chart_germ.translate(0, t0)
    x = TruncatedSeries.variable(N)
    h = regular_leaf(G, N)
    return blow_down_compose((x, h + TruncatedSeries.monomial(GaussianRational.coerce(t0), 0, N)), comp.chart_map)
