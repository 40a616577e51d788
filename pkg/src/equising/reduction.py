"""Reduction of singularities of foliations and S-desingularization of curves.

The driver repeatedly blows up the first site (in component birth order, then
point order) that violates reducedness, until every point of the divisor is
regular or a simple singularity adapted to the divisor.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace

from .algebra import DEFAULT_ORDER, TruncatedSeries
from .blowup import (
    ExceptionalModel,
    Param,
    Site,
    blow_down_compose,
    blow_up,
    branch_needs_blowup,
)
from .errors import DepthExceeded, TruncationTooCoarse
from .foliation import (
    FoliationGerm,
    Kind,
    SingularityRecord,
    _axis_direction,
    _eigenvector,
    _parallel,
    _saddle_node_directions,
    classify_singularity,
    separatrix_along,
)
from .puiseux import CurveGerm, PuiseuxBranch, newton_puiseux, puiseux_normalize

DEFAULT_MAX_DEPTH = 24


class SepClass(str, enum.Enum):
    ISO_STRONG = "Iso^s"
    ISO_WEAK = "Iso^w"
    DIC = "Dic"


@dataclass(frozen=True)
class SeparatrixRecord:
    """A separatrix at the origin with its attachment point on the divisor.

    ``attachment`` is ``(component id, t)`` of the site (``(0, None)`` when no
    blow-up was needed); ``component`` is the divisor component it crosses.
    """

    branch: PuiseuxBranch
    attachment: tuple
    component: int | None
    kind: SepClass
    convergence: str
    parametrization: Param


@dataclass
class ReductionResult:
    germ: FoliationGerm
    model: ExceptionalModel
    records: dict[int, SingularityRecord]
    order: int = DEFAULT_ORDER
    separatrices: list[SeparatrixRecord] = field(default_factory=list)

    @property
    def blowup_count(self) -> int:
        return self.model.blowups

    @property
    def singularities(self) -> list[SingularityRecord]:
        return [
            self.records[s.id]
            for s in self.model.ordered_sites()
            if self.records[s.id].kind is not Kind.REGULAR
        ]

    def dicritical_components(self) -> list[int]:
        return [c.id for c in self.model.component_list() if c.dicritical]


@dataclass
class CurveResolution:
    """Outcome of S-desingularizing a finite set of branches."""

    model: ExceptionalModel
    attachments: dict[int, tuple]

    @property
    def blowup_count(self) -> int:
        return self.model.blowups

    def component_of(self, bid: int) -> int | None:
        cid = self.attachments[bid][0]
        return cid or None


# -- foliations -----------------------------------------------------------------

def _site_status(model: ExceptionalModel, site: Site, N: int) -> tuple[bool, SingularityRecord]:
    rec = classify_singularity(site.germ, components=site.axes, N=N)
    rec = replace(rec, location=site.location)
    dic_axes = [a for a, cid in site.axes.items() if model.components[cid].dicritical]
    if dic_axes:
        if len(dic_axes) == 2 or rec.kind is not Kind.REGULAR:
            return False, rec
        G = site.germ
        transverse = bool(G.Q.constant_term()) if dic_axes[0] == "x" else bool(G.P.constant_term())
        return transverse, rec
    if rec.kind is Kind.REGULAR:
        return True, rec
    # non-dicritical components are invariant, so E is contained in Sep_p
    return rec.is_simple, rec


def reduce_foliation(
    F: FoliationGerm, max_depth: int = DEFAULT_MAX_DEPTH, N: int = DEFAULT_ORDER
) -> ReductionResult:
    """Blow up until every divisor point is regular or simple and adapted to E."""
    model = ExceptionalModel(F)
    status: dict[int, tuple[bool, SingularityRecord]] = {}
    while True:
        target = None
        for site in model.ordered_sites():
            if site.id not in status:
                status[site.id] = _site_status(model, site, N)
            if not status[site.id][0]:
                target = site
                break
        if target is None:
            break
        if target.depth >= max_depth:
            raise DepthExceeded(
                f"reduction needs a blow-up at depth {target.depth + 1} > {max_depth} ({target.label()})",
                partial=model,
            )
        blow_up(model, target.id)
    records = {sid: status[sid][1] for sid in model.sites}
    result = ReductionResult(F, model, records, N)
    result.separatrices = enumerate_separatrices(result, N)
    return result


def branch_from_parametrization(gamma: Param) -> PuiseuxBranch:
    f, g = gamma
    if f.order() is None:
        return PuiseuxBranch.vertical(g.prec)
    return puiseux_normalize(gamma)[0]


def _site_directions(rec: SingularityRecord, germ: FoliationGerm):
    """Tangent directions of the two separatrices with a weak/strong tag."""
    if rec.kind is Kind.SADDLE_NODE:
        weak, strong = _saddle_node_directions(germ)
        return [(weak, True), (strong, False)]
    A = germ.linear_part()
    if rec.eigenvalues is None:
        return None
    return [(_eigenvector(A, lam), False) for lam in rec.eigenvalues]


def enumerate_separatrices(R: ReductionResult, N: int | None = None) -> list[SeparatrixRecord]:
    """Isolated separatrices: one per direction at a simple point not contained in E."""
    N = N or R.order
    out = []
    for site in R.model.ordered_sites():
        rec = R.records[site.id]
        if not rec.is_simple or site.is_corner:
            continue
        dirs = _site_directions(rec, site.germ)
        if dirs is None:
            # irrational eigenvalues only occur without divisor; let the solver report it
            from .foliation import nondegenerate_separatrices

            nondegenerate_separatrices(site.germ, N)
            continue
        for d, is_weak in dirs:
            if any(_parallel(d, _axis_direction(a)) for a in site.axes):
                continue
            sep = separatrix_along(site.germ, d, N)
            gamma = blow_down_compose(sep.parametrization, site.to_origin)
            comp = next(iter(site.axes.values()), None)
            out.append(
                SeparatrixRecord(
                    branch=branch_from_parametrization(gamma),
                    attachment=site.location,
                    component=comp,
                    kind=SepClass.ISO_WEAK if is_weak else SepClass.ISO_STRONG,
                    convergence=sep.convergence,
                    parametrization=gamma,
                )
            )
    return out


# -- curves ------------------------------------------------------------------------

def s_reduce_branches(
    params: list[Param], max_depth: int = DEFAULT_MAX_DEPTH
) -> CurveResolution:
    """Blow up until the branches are smooth, disjoint and transverse to E at trace points."""
    model = ExceptionalModel(None, dict(enumerate(params)))
    while True:
        target = None
        for site in model.ordered_sites():
            if len(site.branches) >= 2 or any(branch_needs_blowup(site, g) for g in site.branches.values()):
                target = site
                break
        if target is None:
            break
        if target.depth >= max_depth:
            raise DepthExceeded(
                f"S-desingularization needs a blow-up at depth {target.depth + 1} > {max_depth}",
                partial=model,
            )
        blow_up(model, target.id)
    attachments = {}
    for site in model.sites.values():
        for bid in site.branches:
            attachments[bid] = site.location
    return CurveResolution(model, attachments)


def s_reduce_curves(
    C: CurveGerm, max_depth: int = DEFAULT_MAX_DEPTH, N: int | None = None
) -> CurveResolution:
    """S-desingularization of a reduced curve germ.

    When the branch expansions are too short to certify the tower and the
    defining polynomial is known, the expansion is recomputed at twice the
    order (up to three times).
    """
    germ = C
    for _ in range(4):
        prec = min((b.prec for b in germ.branches), default=DEFAULT_ORDER)
        try:
            return s_reduce_branches([b.parametrization(prec) for b in germ.branches], max_depth)
        except TruncationTooCoarse:
            if germ.polynomial is None:
                raise
            germ = newton_puiseux(germ.polynomial, 2 * max(prec, N or DEFAULT_ORDER))
    raise TruncationTooCoarse("branch expansions too short for the S-desingularization")
