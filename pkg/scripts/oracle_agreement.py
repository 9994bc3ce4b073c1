"""Compare closed-form Hom/Ext dimensions with the window oracles on random interval pairs."""

import argparse
import random
from collections import Counter

from gentle_derived.covering import CoveringQuiver, IntervalModule, ext1_dim, hom_dim, window_oracle_ext, window_oracle_hom


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=2000, help="pairs per parameter triple")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--slack", type=int, default=None, help="oracle window slack (default p+q)")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    for p in range(0, 4):
        for q in range(1, 4):
            for r in (-3, -2, -1, 1, 2, 3):
                Q = CoveringQuiver(p, q, r)
                for _ in range(args.pairs):
                    j = rng.randrange(Q.copies)
                    mods = []
                    for _ in range(2):
                        b = rng.randint(-3 * Q.n, 3 * Q.n)
                        mods.append(IntervalModule(Q, j, b + rng.randint(1, 2 * Q.n + 2), b))
                    M, N = mods
                    tally["hom", hom_dim(M, N) == window_oracle_hom(M, N, args.slack)] += 1
                    tally["ext", ext1_dim(M, N) == window_oracle_ext(M, N, args.slack)] += 1
    for kind in ("hom", "ext"):
        print(f"{kind}: {tally[kind, True]} agree, {tally[kind, False]} disagree")
    return 1 if tally["hom", False] or tally["ext", False] else 0


if __name__ == "__main__":
    raise SystemExit(main())
