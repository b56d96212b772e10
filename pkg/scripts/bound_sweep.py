"""Tabulate the three degree bounds and their simplified upper estimates.

Usage: python3 scripts/bound_sweep.py [--max-n 12] [--csv out.csv]
"""

import argparse
import csv
import sys

from hyperjet.bounds import debarre_bound, dt_bound, kobayashi_bound


def rows(max_n: int):
    for n in range(2, max_n + 1):
        for rep in (kobayashi_bound(n), debarre_bound(n)):
            yield rep
        for c in range(1, n):
            yield dt_bound(n, c)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=12)
    ap.add_argument("--csv", help="write the table here instead of stdout")
    args = ap.parse_args()
    out = open(args.csv, "w", newline="") if args.csv else sys.stdout
    w = csv.writer(out)
    w.writerow(["bound", "n", "c", "k", "delta0", "digits", "exact", "simplified", "exact_le_simplified"])
    bad = 0
    for rep in rows(args.max_n):
        bad += not rep.within_simplified
        w.writerow([rep.name, rep.n, rep.c, rep.k, rep.delta0, len(str(rep.exact)), rep.exact, rep.simplified, rep.within_simplified])
    if args.csv:
        out.close()
    print(f"rows violating exact <= simplified: {bad}", file=sys.stderr)
    return int(bad > 0)


if __name__ == "__main__":
    sys.exit(main())
