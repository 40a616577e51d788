import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from equising.corpus import catalog, random_germ
from equising.errors import DepthExceeded, FieldPolicyError
from equising.foliation import reduce_equation
from equising.invariants import (
    INF,
    DualTree,
    balanced_equation,
    balanced_multiplicity,
    check_multiplicity_identity,
    dual_tree,
    equisingular_foliations,
    s_dual_tree,
    s_desingularizable,
    second_type,
    trees_isomorphic,
    valence,
)
from equising.puiseux import newton_puiseux
from equising.reduction import SepClass, reduce_foliation

from conftest import P

CATALOG = catalog()
REDUCED = {name: reduce_foliation(F) for name, F in CATALOG.items()}


def germ(p, q):
    return reduce_equation(P(p), P(q))


def relabel(T: DualTree, perm: dict) -> DualTree:
    return DualTree(
        {perm[k]: w for k, w in T.vertices.items()},
        frozenset((perm[a], perm[b]) for a, b in T.arrows),
    )


# -- dual trees ---------------------------------------------------------------------

def test_cusp_dual_tree():
    T = dual_tree(REDUCED["cusp"])
    assert T.vertices == {1: (-3, 0), 2: (-2, 0), 3: (-1, 1)}
    assert T.arrows == {(2, 1), (3, 1), (3, 2)}


def test_radial_and_saddle_node_trees():
    assert dual_tree(REDUCED["radial"]).vertices == {1: (-1, INF)}
    assert dual_tree(REDUCED["tangent_saddle_node"]).vertices == {1: (-1, 2)}


@pytest.mark.parametrize(
    "curve, weights",
    [
        ("y^2 - x^3", [(-3, 0), (-2, 0), (-1, 1)]),
        ("x*y", [(-1, 2)]),
        ("y - x^2", []),
    ],
)
def test_s_dual_trees(curve, weights):
    assert s_dual_tree(newton_puiseux(P(curve))).weights() == weights


def test_tree_serialization_round_trip():
    for R in REDUCED.values():
        T = dual_tree(R)
        assert DualTree.from_dict(T.to_dict()) == T


def test_dot_output():
    dot = dual_tree(REDUCED["radial"]).to_dot()
    assert 'E1 [label="-1/inf"]' in dot and dot.startswith("digraph")


# -- isomorphism ----------------------------------------------------------------------

def test_isomorphism_examples():
    T = dual_tree(REDUCED["cusp"])
    assert trees_isomorphic(T, relabel(T, {1: 7, 2: 3, 3: 5}))
    assert not trees_isomorphic(T, dual_tree(reduce_foliation(germ("-5*x^4", "2*y"))))
    assert trees_isomorphic(DualTree({}), DualTree({}))


def test_isomorphism_respects_arrow_direction():
    a = DualTree({1: (-2, 0), 2: (-2, 0)}, frozenset({(2, 1)}))
    b = DualTree({1: (-2, 0), 2: (-2, 0)}, frozenset({(1, 2)}))
    c = DualTree({1: (-2, 0), 2: (-2, 0)})
    assert trees_isomorphic(a, b)
    assert not trees_isomorphic(a, c)


def test_isomorphism_is_an_equivalence_on_the_corpus():
    trees = [dual_tree(R) for R in REDUCED.values()]
    trees += [s_dual_tree(newton_puiseux(P(f))) for f in ("y^2 - x^3", "x*y", "y^2 - x^5")]
    trees += [relabel(T, {k: 100 - k for k in T.vertices}) for T in trees]
    iso = {(i, j): trees_isomorphic(a, b) for (i, a), (j, b) in itertools.product(enumerate(trees), repeat=2)}
    n = len(trees)
    assert all(iso[i, i] for i in range(n))
    assert all(iso[i, j] == iso[j, i] for i in range(n) for j in range(n))
    for i, j, k in itertools.product(range(n), repeat=3):
        if iso[i, j] and iso[j, k]:
            assert iso[i, k]


# -- valence ------------------------------------------------------------------------

def test_valence_rules():
    R = REDUCED["cusp"]
    assert [valence(c, R) for c in (1, 2, 3)] == [2, 2, 2]
    assert [valence(c, R, rule="intersection") for c in (1, 2, 3)] == [1, 1, 2]
    assert valence(1, REDUCED["radial"]) == 0
    with pytest.raises(ValueError):
        valence(1, R, rule="nonsense")


# -- second type and balanced equation ------------------------------------------

@pytest.mark.parametrize("name, flag, tau", [("cusp", True, 0), ("tangent_saddle_node", False, 1), ("radial", True, 0)])
def test_second_type(name, flag, tau):
    ok, rep = second_type(REDUCED[name])
    assert (ok, rep.tau) == (flag, tau)
    assert (rep.tau == 0) == (rep.contributions == ())


def test_balanced_equations():
    B = balanced_equation(REDUCED["radial"])
    assert [(s.kind, a, s.branch.multiplicity) for s, a in B.entries] == [(SepClass.DIC, 1, 1)] * 2
    assert B.coefficient_sum(1) == 2
    B = balanced_equation(REDUCED["cusp"])
    assert [(s.kind, a) for s, a in B.entries] == [(SepClass.ISO_STRONG, 1)]
    assert balanced_multiplicity(B) == 2
    assert balanced_multiplicity(balanced_equation(REDUCED["tangent_saddle_node"])) == 2


@pytest.mark.parametrize(
    "name, numbers",
    [("cusp", (1, 2, 0)), ("tangent_saddle_node", (2, 2, 1)), ("radial", (1, 2, 0))],
)
def test_multiplicity_identity_examples(name, numbers):
    rep = check_multiplicity_identity(CATALOG[name], REDUCED[name])
    assert rep.holds and (rep.nu0, rep.nu0_hat, rep.tau0) == numbers


def test_radial_curvettes_are_lines():
    for s, _ in balanced_equation(REDUCED["radial"]).entries:
        x, y = s.parametrization
        # a line through the origin: y = c x exactly
        c = y[1]
        assert (y - x * c).order() is None


# -- equisingularity -------------------------------------------------------------

def test_s_desingularizable():
    assert s_desingularizable(REDUCED["cusp"])
    assert s_desingularizable(REDUCED["tangent_saddle_node"])
    assert not s_desingularizable(REDUCED["euler"])


def test_equisingular_foliations():
    F = CATALOG["cusp"]
    # (x, y) -> (x + y^2, y) applied to d(y^2 - x^3)
    G = germ("3*(x + y^2)^2", "-2*y + 6*y*(x + y^2)^2")
    assert equisingular_foliations(F, G)
    assert not equisingular_foliations(F, CATALOG["radial"])
    assert equisingular_foliations(F, F)


# -- properties over random germs ---------------------------------------------------

def _reduced_or_none(seed, N=12):
    F = random_germ(random.Random(seed))
    try:
        return F, reduce_foliation(F, N=N)
    except (FieldPolicyError, DepthExceeded):
        return F, None


@settings(max_examples=25)
@given(st.integers(0, 10_000))
def test_tau_is_nonnegative_and_identity_holds(seed):
    F, R = _reduced_or_none(seed)
    if R is None:
        return
    ok, rep = second_type(R)
    assert rep.tau >= 0 and ok == (rep.tau == 0)
    assert check_multiplicity_identity(F, R).holds


@settings(max_examples=25)
@given(st.integers(0, 10_000), st.integers(1, 5))
def test_balanced_multiplicity_independent_of_curvettes(seed, offset):
    _, R = _reduced_or_none(seed)
    if R is None or not R.dicritical_components():
        return
    a = balanced_multiplicity(balanced_equation(R, N=12))
    b = balanced_multiplicity(balanced_equation(R, offset=offset, N=12))
    assert a == b


def _invariant_pieces(R):
    """Connected components of the union of non-dicritical divisor components."""
    inv = {c.id for c in R.model.component_list() if not c.dicritical}
    edges = [p for p in R.model.corners() if set(p) <= inv]
    pieces = {c: {c} for c in inv}
    for a, b in edges:
        merged = pieces[a] | pieces[b]
        for c in merged:
            pieces[c] = merged
    return {frozenset(p) for p in pieces.values()}


@settings(max_examples=30)
@given(st.integers(0, 10_000))
def test_each_invariant_piece_carries_a_separatrix(seed):
    _, R = _reduced_or_none(seed)
    if R is None or not R.dicritical_components():
        return
    attached = {s.component for s in R.separatrices}
    for piece in _invariant_pieces(R):
        assert piece & attached
