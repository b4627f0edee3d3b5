"""Scan seeded random surd pairs for |log(a/b) - T(a, b)| against 1 and pi^2/6."""

import argparse
import json

from beatty_lab import series
from beatty_lab.arith import SCAN_SEED, random_surd_pairs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--pairs", type=int, default=100)
    ap.add_argument("--terms", type=int, default=10**6)
    ap.add_argument("--seed", type=lambda s: int(s, 0), default=SCAN_SEED)
    ap.add_argument("--out", help="write records as JSON lines")
    args = ap.parse_args()
    recs = series.conjecture_scan(random_surd_pairs(args.pairs, args.seed), args.terms)
    recs.sort(key=lambda r: r.deviation, reverse=True)
    for r in recs[:10]:
        print(f"{r.a.spec():>16} {r.b.spec():>16}  deviation {r.deviation}  +/- {r.error_bound}")
    print(f"certified below 1: {sum(r.bound_1 for r in recs)}/{len(recs)}; "
          f"below pi^2/6: {sum(r.bound_pi2_6 for r in recs)}; violations of 1: {sum(r.violation_1 for r in recs)}")
    if args.out:
        with open(args.out, "w") as fh:
            for r in recs:
                fh.write(json.dumps(r.to_dict()) + "\n")


if __name__ == "__main__":
    main()
