import pytest
from hypothesis import given

from equising.algebra import BivariatePolynomial as B, GaussianRational as G, TruncatedSeries as T, poly_order
from equising.errors import ZeroPolynomial

from conftest import P, gaussians, polynomials


@pytest.mark.parametrize("text, order", [("3*x^2 + 2*y", 1), ("x", 1), ("x^2*y + y^4", 3)])
def test_poly_order(text, order):
    assert poly_order(P(text)) == order


def test_zero_polynomial_order():
    with pytest.raises(ZeroPolynomial):
        poly_order(B.zero())


def test_no_zero_coefficients_stored():
    p = P("x + y") - P("y")
    assert p.terms == {(1, 0): 1}
    assert (p - p).is_zero()


def test_gcd_and_exquo():
    a, b = P("x^2 - y^2"), P("(x - y)*x")
    g = a.gcd(b)
    assert g == P("x - y")
    assert a.exquo(g) == P("x + y")
    with pytest.raises(ValueError):
        a.exquo(P("x + 2*y"))


def test_square_free():
    assert P("y^2 - x^3").is_square_free()
    assert not P("x*y^2 + y^5").is_square_free()


def test_substitute_and_translate():
    p = P("y^2 - x^3")
    assert p.substitute(P("x"), P("x*y")) == P("x^2*y^2 - x^3")
    assert p.translate(1, 0) == P("y^2 - (x + 1)^3")


def test_homogeneous_parts():
    p = P("x + y^2 + 3*x*y - x^3")
    assert p.homogeneous_part(2) == P("y^2 + 3*x*y")
    assert p.degree() == 3


def test_diff():
    assert P("x^2*y + 5*y^3").diff("x") == P("2*x*y")
    assert P("x^2*y + 5*y^3").diff("y") == P("x^2 + 15*y^2")


@given(polynomials(max_degree=3), gaussians, gaussians)
def test_eval_series_agrees_with_evaluate(p, a, b):
    s = p.eval_series(T.monomial(a, 0, 4), T.monomial(b, 0, 4))
    assert s[0] == p.evaluate(a, b)


@given(polynomials(max_degree=3), polynomials(max_degree=3))
def test_eval_series_is_a_ring_map(p, q):
    x = T([0, 1, 2, 0, -1], 6)
    y = T([0, G(0, 1), 0, 3], 6)
    assert (p * q).eval_series(x, y).agrees_with(p.eval_series(x, y) * q.eval_series(x, y))
    assert (p + q).eval_series(x, y).agrees_with(p.eval_series(x, y) + q.eval_series(x, y))


def test_string_form():
    assert str(P("3*x^2 - 2*y")) == "-2*y + 3*x^2"
    assert str(P("i*x")) == "i*x"
