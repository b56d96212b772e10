"""Local intersection lengths for the single and product test curves.

Prints computed versus expected lengths and the wall time of each instance.
Usage: python3 scripts/multiplicity_table.py [--max-N 4] [--max-delta 4] [--unsplit]
"""

import argparse
import itertools
import sys
import time

from hyperjet.bounds import b_coeffs
from hyperjet.incidence import build_product_instance, build_single_instance, local_length


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-N", type=int, default=4)
    ap.add_argument("--max-delta", type=int, default=4)
    ap.add_argument("--unsplit", action="store_true", help="one linear-algebra run over all variables")
    args = ap.parse_args()
    split = not args.unsplit
    mismatches = 0
    print(f"{'instance':<34} {'computed':>9} {'expected':>9} {'seconds':>8}")
    for N in range(2, args.max_N + 1):
        for delta in range(1, args.max_delta + 1):
            start = time.perf_counter()
            got = local_length(build_single_instance(N, delta), split=split)
            want = delta ** (N - 1)
            mismatches += got != want
            print(f"{f'single N={N} delta={delta}':<34} {got:>9} {want:>9} {time.perf_counter() - start:>8.3f}")
    for c, k in itertools.product(range(1, 4), range(0, 3)):
        for deltas in itertools.product(range(1, 4), repeat=c):
            for i in range(1, c + 1):
                start = time.perf_counter()
                got = local_length(build_product_instance(c, k, deltas, i), split=split)
                want = b_coeffs(deltas, k)[i - 1]
                mismatches += got != want
                label = f"product c={c} k={k} d={deltas} i={i}"
                print(f"{label:<34} {got:>9} {want:>9} {time.perf_counter() - start:>8.3f}")
    print(f"mismatches: {mismatches}", file=sys.stderr)
    return int(mismatches > 0)


if __name__ == "__main__":
    sys.exit(main())
