from fractions import Fraction

import pytest
from hypothesis import given

from equising.algebra import I, ONE, ZERO, GaussianRational as G
from equising.errors import IrrationalLeadingRoot

from conftest import gaussians, nonzero_gaussians


def test_canonical_form_and_structural_equality():
    a = G(Fraction(2, 4), Fraction(-6, 8))
    assert (a.re, a.im) == (Fraction(1, 2), Fraction(-3, 4))
    assert a == G(Fraction(1, 2), Fraction(-3, 4))
    assert G(3) == 3 and G(Fraction(1, 3)) == Fraction(1, 3)
    assert hash(G(5)) == hash(5)


def test_imaginary_unit():
    assert I * I == -ONE
    assert I ** 4 == ONE
    assert (1 + I) * (1 - I) == 2


@given(gaussians, gaussians, gaussians)
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == ZERO


@given(nonzero_gaussians, gaussians)
def test_division_inverts_multiplication(a, b):
    assert (b * a) / a == b
    assert a * a.inverse() == ONE


@given(nonzero_gaussians)
def test_norm_is_multiplicative_with_conjugate(a):
    assert a * a.conjugate() == a.norm()


@pytest.mark.parametrize(
    "value, n, principal",
    [(G(4), 2, G(2)), (G(-4), 2, G(0, 2)), (G(0, 2), 2, G(1, 1)), (G(-8), 3, G(-2)), (G(16), 4, G(2))],
)
def test_principal_roots(value, n, principal):
    assert value.nth_root(n) == principal
    for r in value.nth_roots(n):
        assert r ** n == value


def test_irrational_root_raises():
    with pytest.raises(IrrationalLeadingRoot):
        G(2).nth_root(2)
    assert G(2).nth_roots(2) == []


@given(nonzero_gaussians)
def test_roots_of_powers(a):
    for n in (2, 3, 4):
        roots = (a ** n).nth_roots(n)
        assert a in roots
        assert all(r ** n == a ** n for r in roots)
