"""Second type versus not: the tangency excess and the multiplicity identity

    nu0(F) = nu0(F_hat) - 1 + tau0(F)

on the catalog germs and a handful of random ones.
"""

import random

from equising.corpus import catalog, random_germ
from equising.errors import DepthExceeded, FieldPolicyError
from equising.invariants import check_multiplicity_identity, second_type
from equising.reduction import reduce_foliation


def report(name, F):
    R = reduce_foliation(F)
    ok, excess = second_type(R)
    ident = check_multiplicity_identity(F, R)
    print(
        f"{name:22s} blow-ups {R.blowup_count:2d}  second type {'yes' if ok else 'no ':3s}  "
        f"{ident.nu0} = {ident.nu0_hat} - 1 + {ident.tau0}  [{'ok' if ident.holds else 'FAILS'}]"
    )
    for loc, rho, index in excess.contributions:
        print(f"{'':22s} tangent saddle-node on E{loc[0]}: rho {rho}, weak index {index}")


def main(count=8, seed=1):
    for name, F in catalog().items():
        report(name, F)
    rng = random.Random(seed)
    shown = 0
    while shown < count:
        F = random_germ(rng)
        try:
            report(f"random #{shown}", F)
        except (FieldPolicyError, DepthExceeded) as exc:
            print(f"{'skipped':22s} {type(exc).__name__}")
            continue
        shown += 1


if __name__ == "__main__":
    main()
