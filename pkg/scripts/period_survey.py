#!/usr/bin/env python3
"""Survey minimal-resolution periods of every rim up to a given circle size.

For each (n, k) the script reports how many rims are projective, the
distribution of finite periods, and how often the universal bound
2n/gcd(n, k) is attained.  With --verify every closed-form period is
cross-checked against the step-by-step syzygy iteration.
"""

import argparse
import csv
import sys
from collections import Counter
from math import gcd

from rimhom import all_rims, period_closed_form, period_iterative


def survey(max_n: int, verify: bool):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            bound = 2 * n // gcd(n, k)
            histogram: Counter[int] = Counter()
            projective = 0
            for rim in all_rims(n, k):
                result = period_closed_form(rim)
                if verify and period_iterative(rim) != result:
                    raise AssertionError(f"route mismatch for {rim.sorted()} in Z_{n}")
                if result.projective:
                    projective += 1
                else:
                    histogram[result.period] += 1
            yield {
                "n": n,
                "k": k,
                "bound": bound,
                "rims": projective + sum(histogram.values()),
                "projective": projective,
                "attain_bound": histogram.get(bound, 0),
                "periods": dict(sorted(histogram.items())),
            }


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=12, help="largest circle size (default 12)")
    parser.add_argument("--verify", action="store_true", help="cross-check with the iterative route")
    parser.add_argument("--csv", action="store_true", help="emit one CSV row per (n, k)")
    args = parser.parse_args()

    rows = survey(args.max_n, args.verify)
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["n", "k", "rims", "projective", "bound", "attain_bound", "periods"])
        for row in rows:
            writer.writerow(
                [
                    row["n"],
                    row["k"],
                    row["rims"],
                    row["projective"],
                    row["bound"],
                    row["attain_bound"],
                    ";".join(f"{p}:{c}" for p, c in row["periods"].items()),
                ]
            )
        return 0

    print(f"{'n':>3} {'k':>3} {'rims':>6} {'proj':>5} {'bound':>5} {'at-bound':>8}  period histogram")
    for row in rows:
        histogram = " ".join(f"{p}x{c}" for p, c in row["periods"].items()) or "-"
        print(
            f"{row['n']:>3} {row['k']:>3} {row['rims']:>6} {row['projective']:>5} "
            f"{row['bound']:>5} {row['attain_bound']:>8}  {histogram}"
        )
    return 0


if __name__ == "__main__":
    sys.exit(main())
