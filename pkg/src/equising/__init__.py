"""Reduction of singularities and equisingularity invariants of holomorphic
foliation germs and plane curve germs, in exact Q(i) arithmetic."""

from .algebra import BivariatePolynomial, GaussianRational, TruncatedSeries
from .foliation import FoliationGerm, classify_singularity, reduce_equation
from .invariants import (
    balanced_equation,
    check_multiplicity_identity,
    dual_tree,
    equisingular_foliations,
    s_dual_tree,
    second_type,
    trees_isomorphic,
)
from .puiseux import CurveGerm, PuiseuxBranch, equisingular_curves, newton_puiseux
from .reduction import reduce_foliation, s_reduce_curves

__version__ = "0.1.0"

__all__ = [
    "BivariatePolynomial",
    "CurveGerm",
    "FoliationGerm",
    "GaussianRational",
    "PuiseuxBranch",
    "TruncatedSeries",
    "balanced_equation",
    "check_multiplicity_identity",
    "classify_singularity",
    "dual_tree",
    "equisingular_curves",
    "equisingular_foliations",
    "newton_puiseux",
    "reduce_equation",
    "reduce_foliation",
    "s_dual_tree",
    "s_reduce_curves",
    "second_type",
    "trees_isomorphic",
]
