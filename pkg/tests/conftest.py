"""Shared fixtures, hypothesis strategies and the acceptance summary hook."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from equising.algebra import BivariatePolynomial, GaussianRational, TruncatedSeries
from equising.germfile import parse_polynomial

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


# -- strategies -------------------------------------------------------------------

small_fracs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
gaussians = st.builds(GaussianRational, small_fracs, small_fracs)
nonzero_gaussians = gaussians.filter(bool)


@st.composite
def series(draw, prec=12, min_order=0, unit=False):
    """A truncated series; ``unit`` forces a nonzero coefficient at ``min_order``."""
    cs = draw(st.lists(gaussians, min_size=prec, max_size=prec))
    cs[:min_order] = [GaussianRational(0)] * min_order
    if unit and min_order < prec:
        cs[min_order] = draw(nonzero_gaussians)
    return TruncatedSeries(cs, prec)


@st.composite
def polynomials(draw, max_degree=4, min_order=0):
    terms = {}
    for d in range(min_order, max_degree + 1):
        for i in range(d + 1):
            if draw(st.booleans()):
                terms[(i, d - i)] = draw(gaussians)
    return BivariatePolynomial(terms)


_entries = st.builds(GaussianRational, st.integers(-3, 3), st.integers(-1, 1))
invertible_matrices = st.tuples(_entries, _entries, _entries, _entries).filter(
    lambda m: m[0] * m[3] - m[1] * m[2]
).map(lambda m: ((m[0], m[1]), (m[2], m[3])))


def P(text: str) -> BivariatePolynomial:
    return parse_polynomial(text)


def S(*coeffs, prec=None) -> TruncatedSeries:
    return TruncatedSeries(coeffs, len(coeffs) if prec is None else prec)


# -- acceptance summary -------------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status = _CRITERIA[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
