#!/usr/bin/env python3
"""Emit a plot-ready CSV of f(n) against its certified growth envelope.

Columns: n, f, lower = 0.195 g_low(n), upper = 0.25 g_high(n), and the
two dimensionless ratios f/lower and f/upper.  Interval midpoints are
printed; the certified comparisons live in the bounds module, this is
for eyeballing and plotting only.
"""

import argparse
import csv
import sys
from fractions import Fraction

from mpmath import mp

from permrex import bounds, lengths


def midpoint(x: bounds.Enclosure) -> str:
    return mp.nstr(x.mid, 12)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=256)
    parser.add_argument("--output", default=None)
    args = parser.parse_args()

    sink = open(args.output, "w", newline="") if args.output else sys.stdout
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(["n", "f", "lower", "upper", "f_over_lower", "f_over_upper"])
    with bounds.precision(200):
        for n in range(1, args.max_n + 1):
            f_n = lengths.f(n)
            x = bounds.Enclosure.from_int(n)
            lower = bounds.Enclosure.from_fraction(
                Fraction(195, 1000)) * bounds.g_alpha(x, bounds.alpha_low())
            upper = bounds.Enclosure.from_fraction(
                Fraction(1, 4)) * bounds.g_alpha(x, bounds.alpha_high())
            f_enc = bounds.Enclosure.from_int(f_n)
            writer.writerow([
                n,
                f_n,
                midpoint(lower),
                midpoint(upper),
                midpoint(f_enc / lower),
                midpoint(f_enc / upper),
            ])
    if args.output:
        sink.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
