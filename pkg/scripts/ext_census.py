#!/usr/bin/env python3
"""Census of Ext dimensions over all ordered pairs of k-subset rims.

Reports the dimension histogram in a chosen degree, the vanishing
fraction, and (in degree one) how the vanishing locus matches the
noncrossing pairs.  Enumeration is exponential in n, so sizes above the
default cap need an explicit --max-n.
"""

import argparse
import sys
from collections import Counter

from rimhom import all_rims, ext, is_noncrossing, peak_count


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, required=True, help="circle size")
    parser.add_argument("--k", type=int, required=True, help="subset size")
    parser.add_argument("--degree", type=int, default=1, help="Ext degree (default 1)")
    parser.add_argument("--max-n", type=int, default=12, help="enumeration cap (default 12)")
    args = parser.parse_args()

    if args.n > args.max_n:
        parser.error(f"n={args.n} exceeds the cap {args.max_n}; raise --max-n explicitly")
    if not 1 <= args.k <= args.n - 1:
        parser.error(f"k must lie in 1..{args.n - 1}")
    if args.degree < 1:
        parser.error("degree must be positive")

    rims = tuple(all_rims(args.n, args.k))
    histogram: Counter[int] = Counter()
    skipped = 0
    noncrossing_agree = 0
    pairs = 0
    witness = None
    for a in rims:
        if args.degree >= 2 and peak_count(a) < 2:
            skipped += 1  # projective first rim: no higher Ext to census
            continue
        for b in rims:
            result = ext(a, b, args.degree)
            histogram[result.dimension] += 1
            pairs += 1
            if args.degree == 1 and (result.dimension == 0) == is_noncrossing(a, b):
                noncrossing_agree += 1
            if witness is None or result.dimension > witness[0]:
                witness = (result.dimension, a.sorted(), b.sorted())

    print(f"Ext^{args.degree} over Z_{args.n}, k={args.k}: {len(rims)} rims, {pairs} ordered pairs")
    if skipped:
        print(f"skipped {skipped} projective first rims (degree >= 2 needs a resolution)")
    total = sum(histogram.values())
    for dim in sorted(histogram):
        count = histogram[dim]
        print(f"  dim {dim:>3}: {count:>8}  ({count / total:.1%})")
    print(f"vanishing fraction: {histogram.get(0, 0) / total:.1%}")
    if args.degree == 1:
        print(f"noncrossing match: {noncrossing_agree}/{pairs} pairs")
    if witness and witness[0] > 0:
        dim, a, b = witness
        print(f"largest dimension {dim} at I={','.join(map(str, a))} J={','.join(map(str, b))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
