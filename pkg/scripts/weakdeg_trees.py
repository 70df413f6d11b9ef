"""Weak-degree pipeline on random trees and sparse graphs.

Prints the branch taken, CDS size against its reference size, and the final
schedule length against sqrt(n).
"""

import argparse
import math
from fractions import Fraction

from burnkit.burning import verify_schedule
from burnkit.domination import burn_via_weakdeg
from burnkit.generators import random_connected


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[50, 100, 200, 400])
    ap.add_argument("--extra", type=int, default=0, help="extra edges beyond the spanning tree")
    ap.add_argument("--epsilon", type=Fraction, default=Fraction(1, 2))
    ap.add_argument("--seeds", type=int, default=3)
    args = ap.parse_args()

    for n in args.n:
        for seed in range(args.seeds):
            g = random_connected(n, min(args.extra, n * (n - 1) // 2 - (n - 1)), seed)
            sched, rep = burn_via_weakdeg(g, args.epsilon)
            assert verify_schedule(g, sched)
            print(f"n={n:<4} seed={seed} branch={rep.branch:<9} leaves={rep.leaf_count:<4} "
                  f"cds={rep.cds_size:<4} ref={float(rep.reference_size):7.1f} "
                  f"len={sched.length:<3} len/sqrt(n)={sched.length / math.sqrt(n):.2f}")


if __name__ == "__main__":
    main()
