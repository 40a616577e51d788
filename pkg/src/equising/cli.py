"""Command line front end.

Exit codes: 0 success (or equisingular), 1 not equisingular / identity
failure, 2 input error (syntax, unknown germ, invalid germ), 3 depth cap
exceeded, 4 field-policy abort, 5 truncation order too small.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .algebra import DEFAULT_ORDER
from .errors import DepthExceeded, EquisingError, FieldPolicyError, TruncationError
from .foliation import FoliationGerm, algebraic_multiplicity, reduce_equation
from .germfile import GermParseError, GermSpec, load_germ_file
from .invariants import (
    DualTree,
    balanced_equation,
    check_multiplicity_identity,
    dual_tree,
    s_dual_tree,
    second_type,
    trees_isomorphic,
    _curve_tree,
)
from .puiseux import equisingular_curves, newton_puiseux
from .reduction import DEFAULT_MAX_DEPTH, ReductionResult, reduce_foliation, s_reduce_branches, s_reduce_curves

EXIT_OK, EXIT_DIFFERENT, EXIT_INPUT, EXIT_DEPTH, EXIT_FIELD, EXIT_TRUNCATION = range(6)
SCHEMA = 1


class InputError(EquisingError):
    pass


# -- report builders ------------------------------------------------------------

def _location(loc) -> dict:
    cid, t = loc
    if cid == 0:
        return {"component": None, "point": "origin"}
    return {"component": cid, "point": "inf" if t is None else str(t)}


def _components(model) -> list[dict]:
    return [
        {
            "id": c.id,
            "self_int": c.self_int,
            "rho": c.rho,
            "dicritical": c.dicritical,
            "parents": list(c.parents),
        }
        for c in model.component_list()
    ]


def _branch(b) -> dict:
    return {
        "multiplicity": b.multiplicity,
        "char_exponents": [str(e) for e in b.char_exponents],
    }


def reduce_report(name: str, R: ReductionResult) -> dict:
    return {
        "schema": SCHEMA,
        "germ": name,
        "kind": "foliation",
        "blowups": R.blowup_count,
        "components": _components(R.model),
        "singularities": [
            {
                "location": _location(s.location),
                "kind": s.kind.value,
                "ratio": None if s.ratio is None else str(s.ratio),
                "weak_index": s.weak_index,
                "tangent": s.tangent,
            }
            for s in R.singularities
        ],
        "separatrices": [
            {
                "attachment": _location(s.attachment),
                "class": s.kind.value,
                "convergence": s.convergence,
                **_branch(s.branch),
            }
            for s in R.separatrices
        ],
    }


def curve_reduce_report(name: str, germ, res) -> dict:
    return {
        "schema": SCHEMA,
        "germ": name,
        "kind": "curve",
        "blowups": res.blowup_count,
        "components": _components(res.model),
        "branches": [
            {"attachment": _location(res.attachments[k]), **_branch(b)}
            for k, b in enumerate(germ.branches)
        ],
    }


def invariants_report(name: str, F: FoliationGerm, R: ReductionResult) -> dict:
    B = balanced_equation(R)
    ident = check_multiplicity_identity(F, R, B)
    st, rep = second_type(R)
    return {
        "schema": SCHEMA,
        "germ": name,
        "nu0": ident.nu0,
        "nu0_hat": ident.nu0_hat,
        "tau0": ident.tau0,
        "second_type": st,
        "identity_holds": ident.holds,
        "contributions": [
            {"location": _location(loc), "rho": rho, "weak_index": k} for loc, rho, k in rep.contributions
        ],
    }


def _format_reduce(rep: dict) -> str:
    lines = [f"germ {rep['germ']}: {rep['blowups']} blow-up(s), {len(rep['components'])} component(s)"]
    if rep["components"]:
        lines.append("  comp  n1  rho  dicritical  parents")
        for c in rep["components"]:
            parents = ",".join(f"E{p}" for p in c["parents"]) or "-"
            lines.append(f"  E{c['id']:<3} {c['self_int']:>3} {c['rho']:>4}  {str(c['dicritical']):<10}  {parents}")
    for s in rep.get("singularities", []):
        loc = s["location"]
        where = "origin" if loc["component"] is None else f"E{loc['component']} at {loc['point']}"
        extra = ""
        if s["kind"] == "saddle-node":
            extra = f" weak index {s['weak_index']}" + (" tangent" if s["tangent"] else "")
        elif s["ratio"] is not None:
            extra = f" ratio {s['ratio']}"
        lines.append(f"  singularity {where}: {s['kind']}{extra}")
    for s in rep.get("separatrices", []):
        loc = s["attachment"]
        where = "origin" if loc["component"] is None else f"E{loc['component']} at {loc['point']}"
        lines.append(f"  separatrix {s['class']} ({s['convergence']}) at {where}, multiplicity {s['multiplicity']}")
    for b in rep.get("branches", []):
        loc = b["attachment"]
        where = "origin" if loc["component"] is None else f"E{loc['component']} at {loc['point']}"
        lines.append(f"  branch multiplicity {b['multiplicity']} attached at {where}")
    return "\n".join(lines)


def _format_invariants(rep: dict) -> str:
    lines = [
        f"germ {rep['germ']}",
        f"  nu0 = {rep['nu0']}, nu0(F_hat) = {rep['nu0_hat']}, tau0 = {rep['tau0']}",
        f"  second type: {'yes' if rep['second_type'] else 'no'}",
        f"  identity nu0 = nu0_hat - 1 + tau0: {'holds' if rep['identity_holds'] else 'FAILS'}",
    ]
    for c in rep["contributions"]:
        lines.append(
            f"  tangent saddle-node at E{c['location']['component']} {c['location']['point']}: "
            f"rho {c['rho']}, weak index {c['weak_index']}"
        )
    return "\n".join(lines)


def _emit(data: dict, as_json: bool, text: str | None = None):
    if as_json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


# -- commands ----------------------------------------------------------------------

def _spec(path: str, name: str) -> GermSpec:
    germs = load_germ_file(path)
    if name not in germs:
        known = ", ".join(sorted(germs)) or "none"
        raise InputError(f"no germ {name!r} in {path} (known: {known})")
    return germs[name]


def _foliation(spec: GermSpec) -> FoliationGerm:
    if spec.kind != "foliation":
        raise InputError(f"germ {spec.name!r} is a curve; a foliation (P, Q) is required")
    return reduce_equation(spec.P, spec.Q)


def cmd_reduce(args) -> int:
    spec = _spec(args.file, args.germ)
    if spec.kind == "curve":
        germ = newton_puiseux(spec.curve, args.order)
        res = s_reduce_curves(germ, args.max_depth)
        rep = curve_reduce_report(spec.name, germ, res)
    else:
        R = reduce_foliation(_foliation(spec), args.max_depth, args.order)
        rep = reduce_report(spec.name, R)
    _emit(rep, args.json, _format_reduce(rep))
    return EXIT_OK


def cmd_invariants(args) -> int:
    spec = _spec(args.file, args.germ)
    F = _foliation(spec)
    R = reduce_foliation(F, args.max_depth, args.order)
    rep = invariants_report(spec.name, F, R)
    _emit(rep, args.json, _format_invariants(rep))
    return EXIT_OK


def _tree_for(spec: GermSpec, s_tree: bool, max_depth: int, N: int) -> DualTree:
    if spec.kind == "curve":
        return s_dual_tree(s_reduce_curves(newton_puiseux(spec.curve, N), max_depth))
    R = reduce_foliation(_foliation(spec), max_depth, N)
    if s_tree:
        return _curve_tree(s_reduce_branches([s.parametrization for s in R.separatrices], max_depth))
    return dual_tree(R)


def cmd_tree(args) -> int:
    spec = _spec(args.file, args.germ)
    T = _tree_for(spec, args.s_tree, args.max_depth, args.order)
    if args.dot:
        sys.stdout.write(T.to_dot(_dot_name(spec.name)))
    else:
        print(json.dumps({"schema": SCHEMA, "germ": spec.name, "tree": T.to_dict()}, indent=2))
    return EXIT_OK


def _dot_name(name: str) -> str:
    return "".join(ch if ch.isalnum() else "_" for ch in name) or "tree"


def cmd_compare(args) -> int:
    a = _spec(args.file_a, args.germ_a)
    b = _spec(args.file_b, args.germ_b)
    mode = args.mode or ("curves" if a.kind == "curve" and b.kind == "curve" else "foliations")
    if mode == "curves":
        for s in (a, b):
            if s.kind != "curve":
                raise InputError(f"germ {s.name!r} is not a curve")
        cmp = equisingular_curves(newton_puiseux(a.curve, args.order), newton_puiseux(b.curve, args.order))
        rep = {
            "schema": SCHEMA,
            "mode": mode,
            "equisingular": cmp.equisingular,
            "bijection": None if cmp.bijection is None else list(cmp.bijection),
            "reason": cmp.reason,
        }
    else:
        Ta = _tree_for(a, False, args.max_depth, args.order)
        Tb = _tree_for(b, False, args.max_depth, args.order)
        same = trees_isomorphic(Ta, Tb)
        rep = {
            "schema": SCHEMA,
            "mode": mode,
            "equisingular": same,
            "bijection": None,
            "reason": None if same else "dual trees differ",
        }
    text = "equisingular" if rep["equisingular"] else f"not equisingular: {rep['reason']}"
    if rep["bijection"] is not None:
        text += f" (branch bijection {rep['bijection']})"
    _emit(rep, args.json, text)
    return EXIT_OK if rep["equisingular"] else EXIT_DIFFERENT


def cmd_corpus(args) -> int:
    """Check the multiplicity identity on random germs."""
    from .corpus import random_germ

    rng = random.Random(args.seed)
    checked = skipped = failed = 0
    rows = []
    while checked < args.count:
        F = random_germ(rng)
        try:
            R = reduce_foliation(F, args.max_depth, args.order)
            ident = check_multiplicity_identity(F, R)
        except (FieldPolicyError, DepthExceeded):
            skipped += 1
            continue
        checked += 1
        failed += not ident.holds
        rows.append({"P": str(F.P), "Q": str(F.Q), "nu0": ident.nu0, "nu0_hat": ident.nu0_hat,
                     "tau0": ident.tau0, "identity_holds": ident.holds})
    rep = {"schema": SCHEMA, "seed": args.seed, "checked": checked, "skipped": skipped,
           "failed": failed, "germs": rows}
    _emit(rep, args.json, f"checked {checked}, skipped {skipped} (field policy or depth), failed {failed}")
    return EXIT_OK if not failed else EXIT_DIFFERENT


# -- entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="equising",
        description="Reduction of singularities and equisingularity invariants of plane foliation germs.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int, default=DEFAULT_ORDER, help="truncation order N (default 32)")
    common.add_argument("--max-depth", type=int, default=DEFAULT_MAX_DEPTH, help="blow-up depth cap (default 24)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="reduce a foliation (or S-reduce a curve)")
    p.add_argument("file")
    p.add_argument("germ")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("invariants", parents=[common], help="nu0, tau0, second type, balanced equation")
    p.add_argument("file")
    p.add_argument("germ")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("tree", parents=[common], help="dual tree as JSON or DOT")
    p.add_argument("file")
    p.add_argument("germ")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    p.add_argument("--s-tree", action="store_true", help="tree of the S-desingularization")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("compare", parents=[common], help="equisingularity of two germs")
    p.add_argument("file_a")
    p.add_argument("germ_a")
    p.add_argument("file_b")
    p.add_argument("germ_b")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--curves", dest="mode", action="store_const", const="curves")
    mode.add_argument("--foliations", dest="mode", action="store_const", const="foliations")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("corpus", parents=[common], help="multiplicity identity on random germs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=50)
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GermParseError, InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except DepthExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEPTH
    except FieldPolicyError as exc:
        print(f"error: {exc} [datum: {exc.datum}]", file=sys.stderr)
        return EXIT_FIELD
    except TruncationError as exc:
        print(f"error: {exc}; try a larger --order", file=sys.stderr)
        return EXIT_TRUNCATION
    except EquisingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
