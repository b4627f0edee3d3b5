"""Deviation of the k-shifted ratio sum (plus T) from log(a/b) along k = 2^i."""

import argparse

from beatty_lab import oracle, series
from beatty_lab.arith import parse_slope


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", default="phi")
    ap.add_argument("--b", default="phi2")
    ap.add_argument("--C", type=int, default=16, help="sum up to C k^2 terms")
    ap.add_argument("--N", type=int, default=10**6, help="truncation of T")
    ap.add_argument("--max-exp", type=int, default=12)
    args = ap.parse_args()
    a, b = parse_slope(args.a), parse_slope(args.b)
    target = oracle.oracle_log_ratio(a, b)
    ks = [2**i for i in range(4, args.max_exp + 1)]
    print(f"log(a/b) = {target}")
    prev = None
    for p in series.main_theorem_limit(a, b, ks, C=args.C, N=args.N, target=target):
        trend = "" if prev is None else ("down" if p.deviation <= prev else "up")
        print(f"k={p.k:6d}  m={p.m:11d}  estimate={p.estimate:.15f}  deviation={p.deviation:.3e}  {trend}")
        prev = p.deviation


if __name__ == "__main__":
    main()
