#!/usr/bin/env python3
"""Run every certified sweep at full scale and print a one-line verdict each.

This is the long-form version of `permrex bounds`: growth bounds for
n <= 1024, the factorial sandwich for n <= 100, and the analytic
brackets on the quarter-step grid up to 100, with the doubling identity
pinned to radius 1e-30.  Exits nonzero if anything fails to certify.
"""

import argparse
import sys
import time
from fractions import Fraction

from permrex import bounds


def show(tag, report, elapsed):
    print(
        f"{tag:34s} {report.status:10s} points={report.points_checked:5d} "
        f"bits<={report.max_precision_bits:4d} t={elapsed:6.2f}s "
        f"worst={report.worst_margin} at {report.worst_point}"
    )
    if report.failures:
        for failure in report.failures[:5]:
            print(f"    {failure}")
    return report.status == bounds.CERTIFIED


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=1024)
    parser.add_argument(
        "--precision-bits", type=int, default=bounds.DEFAULT_PRECISION_BITS)
    args = parser.parse_args()

    grid = bounds.default_grid()
    bits = args.precision_bits
    all_ok = True

    started = time.monotonic()
    rep = bounds.check_fn_bounds(args.max_n, base_bits=bits)
    all_ok &= show("fn growth bounds", rep, time.monotonic() - started)

    started = time.monotonic()
    rep = bounds.check_stirling_sandwich(min(args.max_n, 100), base_bits=bits)
    all_ok &= show("factorial sandwich", rep, time.monotonic() - started)

    started = time.monotonic()
    rep = bounds.check_lemma_sa(grid, base_bits=bits)
    all_ok &= show("stirling midpoint bracket", rep, time.monotonic() - started)

    for name, alpha in (("alpha_low", bounds.alpha_low),
                        ("alpha_high", bounds.alpha_high)):
        started = time.monotonic()
        usable = bounds.filter_ga_domain(grid, alpha, base_bits=bits)
        rep = bounds.check_lemma_ga(usable, alpha, base_bits=bits)
        all_ok &= show(
            f"growth template bracket [{name}]", rep,
            time.monotonic() - started)

    for beta in (Fraction(2), Fraction(5, 2)):
        started = time.monotonic()
        rep = bounds.check_lemma_gaS(grid, beta, base_bits=bits)
        all_ok &= show(
            f"doubling identity [beta={beta}]", rep,
            time.monotonic() - started)

    print("ALL CERTIFIED" if all_ok else "CERTIFICATION FAILED")
    return 0 if all_ok else 1


if __name__ == "__main__":
    sys.exit(main())
