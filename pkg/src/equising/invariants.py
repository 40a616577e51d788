"""Dual trees, tangency excess, balanced equations and equisingularity tests."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .algebra import DEFAULT_ORDER
from .blowup import ExceptionalModel, free_points, leaf_through
from .errors import InsufficientFreePoints
from .foliation import FoliationGerm, Kind, algebraic_multiplicity
from .puiseux import CurveGerm
from .reduction import (
    DEFAULT_MAX_DEPTH,
    CurveResolution,
    ReductionResult,
    SepClass,
    SeparatrixRecord,
    branch_from_parametrization,
    reduce_foliation,
    s_reduce_branches,
    s_reduce_curves,
)

INF = float("inf")


@dataclass(frozen=True)
class DualTree:
    """Weighted directed graph of divisor components.

    ``vertices`` maps a component id to ``(n1, n2)`` with ``n2 == INF`` on
    dicritical components; ``arrows`` holds ``(child, parent)`` pairs.
    """

    vertices: dict
    arrows: frozenset = frozenset()

    def __len__(self):
        return len(self.vertices)

    def weights(self) -> list[tuple]:
        return sorted(self.vertices.values())

    def valence(self, v: int) -> int:
        return sum(1 for a in self.arrows if v in a)

    def to_dict(self) -> dict:
        return {
            "vertices": [
                {"id": k, "n1": n1, "n2": "inf" if n2 == INF else n2}
                for k, (n1, n2) in sorted(self.vertices.items())
            ],
            "arrows": [list(a) for a in sorted(self.arrows)],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DualTree":
        verts = {
            v["id"]: (v["n1"], INF if v["n2"] == "inf" else v["n2"]) for v in d["vertices"]
        }
        return cls(verts, frozenset(tuple(a) for a in d["arrows"]))

    def to_dot(self, name: str = "dual_tree") -> str:
        lines = [f"digraph {name} {{"]
        for k, (n1, n2) in sorted(self.vertices.items()):
            lab = f"{n1}/{'inf' if n2 == INF else n2}"
            lines.append(f'  E{k} [label="{lab}"];')
        for a, b in sorted(self.arrows):
            lines.append(f"  E{a} -> E{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TangencyExcessReport:
    tau: int
    contributions: tuple = ()  # (location, rho, weak index)


@dataclass
class BalancedDivisor:
    entries: list[tuple[SeparatrixRecord, int]] = field(default_factory=list)

    def coefficient_sum(self, component: int) -> int:
        return sum(a for s, a in self.entries if s.kind is SepClass.DIC and s.component == component)


@dataclass(frozen=True)
class MultiplicityIdentity:
    holds: bool
    nu0: int
    nu0_hat: int
    tau0: int


# -- trees ----------------------------------------------------------------------

def _tree(model: ExceptionalModel, n2: dict) -> DualTree:
    verts = {}
    arrows = set()
    for c in model.component_list():
        verts[c.id] = (c.self_int, INF if c.dicritical else n2.get(c.id, 0))
        for p in c.parents:
            arrows.add((c.id, p))
    return DualTree(verts, frozenset(arrows))


def dual_tree(R: ReductionResult) -> DualTree:
    """The dual tree of a reduction; arrows point from a component to those through its center."""
    counts = Counter(s.component for s in R.separatrices if s.component is not None)
    return _tree(R.model, counts)


def _curve_tree(res: CurveResolution) -> DualTree:
    counts = Counter(res.component_of(b) for b in res.attachments)
    return _tree(res.model, counts)


def s_dual_tree(C) -> DualTree:
    """Dual tree of the S-desingularization of a curve germ (or of an existing resolution)."""
    res = C if isinstance(C, CurveResolution) else s_reduce_curves(C)
    return _curve_tree(res)


def trees_isomorphic(T: DualTree, U: DualTree) -> bool:
    """Weight- and arrow-preserving isomorphism, by backtracking over weight classes."""
    if T.weights() != U.weights() or len(T.arrows) != len(U.arrows):
        return False

    def signature(tree, v):
        out = sorted(tree.vertices[b] for a, b in tree.arrows if a == v)
        inn = sorted(tree.vertices[a] for a, b in tree.arrows if b == v)
        return (tree.vertices[v], tuple(out), tuple(inn))

    tv = sorted(T.vertices, key=lambda v: signature(T, v))
    sig_u = {v: signature(U, v) for v in U.vertices}
    assign: dict = {}
    used: set = set()

    def consistent(v, w):
        for a, b in T.arrows:
            if a == v and b in assign and (w, assign[b]) not in U.arrows:
                return False
            if b == v and a in assign and (assign[a], w) not in U.arrows:
                return False
        return True

    def extend(i):
        if i == len(tv):
            return True
        v = tv[i]
        s = signature(T, v)
        for w in U.vertices:
            if w in used or sig_u[w] != s or not consistent(v, w):
                continue
            assign[v] = w
            used.add(w)
            if extend(i + 1):
                return True
            del assign[v]
            used.discard(w)
        return False

    return extend(0)


def valence(D: int, source, rule: str = "arrows") -> int:
    """Valence of component ``D``.

    ``rule="arrows"`` counts dual-tree arrows incident to ``D`` (genealogy,
    both directions). ``rule="intersection"`` counts the components meeting
    ``D`` in the final divisor; this is the count the balanced equation uses.
    """
    model = source.model if hasattr(source, "model") else source
    if rule == "intersection":
        return len(model.neighbours(D))
    if rule == "arrows":
        comps = model.components
        return sum(1 for p in comps[D].parents) + sum(1 for c in comps.values() if D in c.parents)
    raise ValueError(f"unknown valence rule {rule!r}")


# -- second type and balanced equation -------------------------------------------

def second_type(R: ReductionResult) -> tuple[bool, TangencyExcessReport]:
    """``(tau0 == 0, report)`` where tau0 sums ``rho(D_q) (Ind_q - 1)`` over tangent saddle-nodes."""
    contributions = []
    for rec in R.singularities:
        if rec.kind is Kind.SADDLE_NODE and rec.tangent:
            rho = R.model.components[rec.weak_component].rho
            contributions.append((rec.location, rho, rec.weak_index))
    tau = sum(rho * (k - 1) for _, rho, k in contributions)
    return tau == 0, TangencyExcessReport(tau, tuple(contributions))


def balanced_equation(R: ReductionResult, offset: int = 0, N: int | None = None) -> BalancedDivisor:
    """Isolated separatrices with coefficient 1, plus ``|2 - val(D)|`` leaves per dicritical ``D``.

    Leaves are taken through the free points ``t = offset + 1, offset + 2, ...``
    of the chart of ``D`` and carry coefficient ``sign(2 - val(D))``.
    """
    N = N or R.order
    B = BalancedDivisor([(s, 1) for s in R.separatrices])
    for cid in R.dicritical_components():
        comp = R.model.components[cid]
        k = 2 - valence(cid, R.model, rule="intersection")
        if k == 0:
            continue
        if comp.chart_germ is None:
            raise InsufficientFreePoints(f"component E{cid} has no chart to place leaves in")
        avoid = [p for p in free_points(comp, offset)] if offset else []
        sign = 1 if k > 0 else -1
        for t0 in free_points(comp, abs(k), avoid):
            gamma = leaf_through(comp, t0, N)
            B.entries.append(
                (
                    SeparatrixRecord(
                        branch=branch_from_parametrization(gamma),
                        attachment=(cid, t0),
                        component=cid,
                        kind=SepClass.DIC,
                        convergence="analytic",
                        parametrization=gamma,
                    ),
                    sign,
                )
            )
    return B


def balanced_multiplicity(B: BalancedDivisor) -> int:
    return sum(a * s.branch.multiplicity for s, a in B.entries)


def check_multiplicity_identity(
    F: FoliationGerm, R: ReductionResult, B: BalancedDivisor | None = None
) -> MultiplicityIdentity:
    """Evaluate ``nu0(F) = nu0(F_hat) - 1 + tau0(F)`` exactly."""
    B = B if B is not None else balanced_equation(R)
    nu0 = algebraic_multiplicity(F)
    nu0_hat = balanced_multiplicity(B)
    tau0 = second_type(R)[1].tau
    return MultiplicityIdentity(nu0 == nu0_hat - 1 + tau0, nu0, nu0_hat, tau0)


# -- equisingularity ----------------------------------------------------------------

def s_desingularizable(
    F: FoliationGerm | ReductionResult, max_depth: int = DEFAULT_MAX_DEPTH, N: int = DEFAULT_ORDER
) -> bool:
    """Whether the S-desingularization of the isolated separatrices is a reduction of ``F``.

    For dicritical germs only the isolated separatrices are used.
    """
    R = F if isinstance(F, ReductionResult) else reduce_foliation(F, max_depth, N)
    params = [s.parametrization for s in R.separatrices]
    res = s_reduce_branches(params, max_depth)
    return trees_isomorphic(dual_tree(R), _curve_tree(res))


def equisingular_foliations(
    F: FoliationGerm, G: FoliationGerm, max_depth: int = DEFAULT_MAX_DEPTH, N: int = DEFAULT_ORDER
) -> bool:
    return trees_isomorphic(
        dual_tree(reduce_foliation(F, max_depth, N)), dual_tree(reduce_foliation(G, max_depth, N))
    )
