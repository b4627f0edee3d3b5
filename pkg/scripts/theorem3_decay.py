"""Residuals of the harmonic-type Beatty sum against its asymptotic formula.

Prints residual(m), m * residual(m) and the ratios residual(m)/residual(2m).
"""

import argparse

from beatty_lab import series
from beatty_lab.arith import parse_slope


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--c", nargs="+", default=["phi", "phi2", "surd:1,1,2"])
    ap.add_argument("--k", nargs="+", type=int, default=[0, 1, 3])
    ap.add_argument("--N", type=int, default=10**7)
    ap.add_argument("--m", nargs="+", type=int, default=[1000, 2000, 4000, 8000])
    args = ap.parse_args()
    for spec in args.c:
        c = parse_slope(spec)
        for k in args.k:
            reps = series.theorem3_residuals(c, k, args.m, N=args.N)
            res = [r.residual for r in reps]
            ratios = [x / y for x, y in zip(res, res[1:])]
            print(f"c={spec} k={k}")
            for m, r in zip(args.m, reps):
                print(f"  m={m:6d} residual={r.extra['signed_residual']:+.3e}  m*residual={m * r.residual:.3f}")
            print("  ratios " + " ".join(f"{x:.2f}" for x in ratios)
                  + f"  mean {sum(ratios) / len(ratios):.2f}")


if __name__ == "__main__":
    main()
