"""Min-degree pipeline on random regular graphs: length against ceil(sqrt(3n/(k+1))).

    python scripts/mindeg_sweep.py --n 2000 --k 4 8 16 32 --seeds 1 2 3 4 5
"""

import argparse
import time

from burnkit.burning import verify_schedule
from burnkit.domination import burn_via_mindeg
from burnkit.generators import random_regular


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=2000)
    ap.add_argument("--k", type=int, nargs="+", default=[4, 8, 16, 32])
    ap.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3, 4, 5])
    ap.add_argument("--exact-threshold", type=int, default=20)
    args = ap.parse_args()

    print(f"{'k':>3} {'seed':>4} {'|H|':>5} {'bound':>5} {'b(H)':>5} {'len':>4} {'ref':>4} {'len/ref':>7} {'ms':>7}")
    for k in args.k:
        for seed in args.seeds:
            t0 = time.perf_counter()
            g = random_regular(args.n, k, seed)
            sched, rep = burn_via_mindeg(g, args.exact_threshold)
            assert verify_schedule(g, sched)
            ms = (time.perf_counter() - t0) * 1000
            ref = rep.bounds.thm1_ref
            print(f"{k:>3} {seed:>4} {rep.h_size:>5} {rep.lemma2_bound:>5} {rep.h_schedule_length:>5} "
                  f"{sched.length:>4} {ref:>4} {sched.length / ref:>7.2f} {ms:>7.0f}")


if __name__ == "__main__":
    main()
