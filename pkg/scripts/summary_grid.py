"""Component counts of the AR quivers of D_fd(Gamma(p,q,r)) and D_fd(GammaPrime(q,r)) on a grid."""

import argparse
import time

from gentle_derived.arquiver import summary_gamma, summary_gamma_prime


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-pq", type=int, default=3)
    ap.add_argument("--max-r", type=int, default=3)
    args = ap.parse_args()

    t0 = time.perf_counter()
    rs = [r for r in range(-args.max_r, args.max_r + 1) if r]
    print("algebra\tcomponents\texpected")
    bad = 0
    for p in range(1, args.max_pq + 1):
        for q in range(1, args.max_pq + 1):
            for r in rs:
                n = summary_gamma(p, q, r).component_count
                bad += n != 3 * abs(r)
                print(f"Gamma({p},{q},{r})\t{n}\t{3 * abs(r)}")
    for q in range(1, args.max_pq + 1):
        for r in rs:
            n = summary_gamma_prime(q, r).component_count
            bad += n != 2 * abs(r)
            print(f"GammaPrime({q},{r})\t{n}\t{2 * abs(r)}")
    print(f"disagreements: {bad}  ({time.perf_counter() - t0:.2f}s)")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
