"""Search tau^k = Sigma^e relations for every module family over a (p, q, r) grid.

    python scripts/tau_sigma_sweep.py --max-pq 3 --max-r 3 --samples 30
"""

import argparse

from gentle_derived.covering import CoveringQuiver
from gentle_derived.orbit import derived_families, verify_tau_sigma


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-pq", type=int, default=3)
    ap.add_argument("--max-r", type=int, default=3)
    ap.add_argument("--samples", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    mismatches = 0
    print("p\tq\tr\tfamily\trelation\texpected")
    for p in range(0, args.max_pq + 1):
        for q in range(1, args.max_pq + 1):
            for r in range(-args.max_r, args.max_r + 1):
                if r == 0:
                    continue
                Q = CoveringQuiver(p, q, r)
                expected = {"X": (q, -r), "X1": (q, -r), "X2": (p, r), "P": None}
                for fam in derived_families(Q):
                    rep = verify_tau_sigma(Q, fam, args.samples, args.seed)
                    rel = rep.relation
                    mismatches += rel != expected[fam]
                    show = "absent" if rel is None else f"tau^{rel[0]} = Sigma^{rel[1]}"
                    print(f"{p}\t{q}\t{r}\t{fam}\t{show}\t{expected[fam]}")
    print(f"mismatches: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
