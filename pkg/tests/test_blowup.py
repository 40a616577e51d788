import random

import pytest
from hypothesis import given, settings, strategies as st

from equising.algebra import GaussianRational as G, TruncatedSeries as T
from equising.blowup import (
    ExceptionalModel,
    blow_down_compose,
    blow_up,
    blow_up_charts,
    dicritical_test,
    strict_transform_curve,
)
from equising.corpus import random_germ
from equising.foliation import reduce_equation
from equising.reduction import reduce_foliation

from conftest import P, S, series


def germ(p, q):
    return reduce_equation(P(p), P(q))


@pytest.mark.parametrize(
    "p, q, dic", [("-y", "x", True), ("y", "x", False), ("3*x^2", "-2*y", False)]
)
def test_dicritical_test(p, q, dic):
    assert dicritical_test(germ(p, q)) is dic


def test_radial_blow_up_is_transverse():
    G1, G2, dic = blow_up_charts(germ("-y", "x"))
    assert dic
    # chart 1: the form is dt, transverse to E = {x = 0}
    assert G1.P.is_zero() and G1.Q == P("1")
    assert G2.P == P("-1") and G2.Q.is_zero()


def test_tangent_saddle_node_charts():
    G1, G2, dic = blow_up_charts(germ("y^2 - x*y", "x^2"))
    assert not dic
    assert (G1.P, G1.Q) == (P("y^2"), P("x"))
    assert (G2.P, G2.Q) == (P("y*(1 - x)"), P("x"))


def test_bookkeeping_of_a_second_blow_up():
    m = ExceptionalModel(germ("3*x^2", "-2*y"))
    blow_up(m, 0)
    (e1,) = m.components.values()
    assert (e1.self_int, e1.rho) == (-1, 1)
    site = [s for s in m.ordered_sites() if s.germ.is_singular()][0]
    res = blow_up(m, site.id)
    assert m.components[1].self_int == -2
    assert res.component.self_int == -1 and res.component.rho == m.components[1].rho
    assert res.component.parents == (1,)


def test_cusp_tower_rho():
    R = reduce_foliation(germ("3*x^2", "-2*y"))
    comps = R.model.component_list()
    assert [c.rho for c in comps] == [1, 1, 2]
    assert [c.self_int for c in comps] == [-3, -2, -1]
    (sep,) = R.separatrices
    assert sep.branch.multiplicity == 2 and sep.component == 3


def test_self_intersection_ledger():
    for pq in [("3*x^2", "-2*y"), ("-5*x^4", "2*y"), ("y^2 - x*y", "x^2")]:
        R = reduce_foliation(germ(*pq))
        centered_on_existing = sum(len(c.parents) for c in R.model.components.values())
        assert R.model.self_intersection_deficit() == centered_on_existing


@pytest.mark.parametrize(
    "gamma, chart, t0, image",
    [
        ((T.monomial(1, 2, 12), T.monomial(1, 3, 12)), "1", 0, (T.monomial(1, 2, 12), T.variable(10))),
        ((T.variable(12), T.monomial(5, 1, 12)), "1", 5, (T.variable(12), T.zero(11))),
        ((T.monomial(1, 2, 12), S(0, 0, 0, 1, 1, prec=12)), "1", 0, (T.monomial(1, 2, 12), S(0, 1, 1, prec=10))),
        ((T.monomial(1, 3, 12), T.monomial(1, 2, 12)), "2", None, (T.variable(10), T.monomial(1, 2, 12))),
    ],
)
def test_strict_transform_curve(gamma, chart, t0, image):
    c, t, g = strict_transform_curve(gamma)
    assert (c, t) == (chart, t0)
    assert g[0].agrees_with(image[0]) and g[1].agrees_with(image[1])


def _blow_down_once(chart, t0, g):
    if chart == "1":
        to_origin = (P("x"), P(f"x*(y + ({t0}))"))
    else:
        to_origin = (P("x*y"), P("y"))
    return blow_down_compose(g, to_origin)


@given(series(prec=14, min_order=1, unit=True), series(prec=14, min_order=1))
def test_strict_transform_round_trip(a, b):
    chart, t0, g = strict_transform_curve((a, b))
    x, y = _blow_down_once(chart, t0, g)
    assert x.agrees_with(a) and y.agrees_with(b)


def test_blow_down_through_the_cusp_tower():
    t = T.variable(40)
    gamma = (t ** 2, t ** 3)
    maps = []
    g = gamma
    for _ in range(3):
        chart, t0, g = strict_transform_curve(g)
        maps.append((chart, t0))
    for chart, t0 in reversed(maps):
        g = _blow_down_once(chart, t0, g)
    assert g[0].agrees_with(gamma[0]) and g[1].agrees_with(gamma[1])


def test_radial_leaf_is_a_line():
    R = reduce_foliation(germ("-y", "x"))
    from equising.blowup import leaf_through

    x, y = leaf_through(R.model.components[1], G(3), 10)
    assert x.agrees_with(T.variable(10)) and y.agrees_with(T.monomial(3, 1, 10))


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_dicritical_test_matches_invariance(seed):
    F = random_germ(random.Random(seed))
    G1, G2, dic = blow_up_charts(F)
    # E = {x = 0} is invariant in chart 1 iff the dt coefficient vanishes on it
    invariant = not any(G1.Q.restrict("x"))
    assert dic is not invariant
    for H in (G1, G2):
        assert H.P.gcd(H.Q).degree() <= 0
