"""Recompute every published number for a = phi, b = phi^2 and print a table."""

import argparse

from beatty_lab.reproduce import reproduce_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--word-length", type=int, default=10**5)
    args = ap.parse_args()
    rows = reproduce_rows(word_length=args.word_length)
    width = max(len(r["item"]) for r in rows)
    for r in rows:
        print(f"{r['item']:<{width}}  {r['status']:<17} expected {r['expected']}  computed {r['computed']}")
        if r["note"]:
            print(f"{'':<{width}}  {r['note']}")
    bad = [r for r in rows if r["status"] == "FAIL"]
    print(f"\n{len(rows) - len(bad)}/{len(rows)} rows ok or explained")


if __name__ == "__main__":
    main()
