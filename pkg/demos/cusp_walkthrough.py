"""Reduce the cusp foliation d(x^3 - y^2) step by step and compare its dual tree
with the S-tree of the curve y^2 = x^3.

Run with ``python demos/cusp_walkthrough.py``.
"""

from equising import newton_puiseux, reduce_equation, reduce_foliation
from equising.germfile import parse_polynomial
from equising.invariants import dual_tree, s_dual_tree, trees_isomorphic


def main():
    F = reduce_equation(parse_polynomial("3*x^2"), parse_polynomial("-2*y"))
    R = reduce_foliation(F)
    print(f"blow-ups: {R.blowup_count}, centers: {', '.join(R.model.history)}")
    for c in R.model.component_list():
        print(f"  E{c.id}: self-intersection {c.self_int}, rho {c.rho}, parents {list(c.parents)}")
    for rec in R.singularities:
        cid, t = rec.location
        where = "inf" if t is None else t
        print(f"  {rec.kind.value} point on E{cid} at t={where}, eigenvalue ratio {rec.ratio}")
    (sep,) = R.separatrices
    x, y = sep.parametrization
    print(f"separatrix: x = {x.truncate(6)}, y = {y.truncate(6)}")

    T = dual_tree(R)
    S = s_dual_tree(newton_puiseux(parse_polynomial("y^2 - x^3")))
    print(T.to_dot("cusp_foliation"), end="")
    print("equal to the S-tree of y^2 = x^3:", trees_isomorphic(T, S))


if __name__ == "__main__":
    main()
