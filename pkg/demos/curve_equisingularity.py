"""Puiseux data, intersection multiplicities and S-trees of the curve catalog."""

from itertools import combinations

from equising import equisingular_curves, newton_puiseux
from equising.corpus import curve_catalog
from equising.invariants import s_dual_tree, trees_isomorphic
from equising.puiseux import intersection_multiplicity


def main():
    germs = {name: newton_puiseux(F) for name, F in curve_catalog().items()}
    for name, C in germs.items():
        exps = [tuple(str(e) for e in b.char_exponents) for b in C.branches]
        pairs = [intersection_multiplicity(a, b) for a, b in combinations(C.branches, 2)]
        print(f"{name:14s} branches {len(C.branches)}  char. exponents {exps}  intersections {pairs}")
    print()
    names = sorted(germs)
    trees = {n: s_dual_tree(germs[n]) for n in names}
    for a, b in combinations(names, 2):
        same = equisingular_curves(germs[a], germs[b]).equisingular
        # the resolution trees must agree with the branch-data comparison
        assert same == trees_isomorphic(trees[a], trees[b]), (a, b)
        if same:
            print(f"equisingular: {a} ~ {b}")


if __name__ == "__main__":
    main()
