#!/usr/bin/env python3
"""Print the exhaustive-search cost tables for n = 1, 2, 3.

For each n: every minimal cost by language size, the per-permutation
table ell(n, k), and the verdict that the permutation language's cost
equals f(n).  Useful when eyeballing how sharing beats word-listing as
coverage grows.
"""

import sys
from collections import Counter

from permrex import lengths, oracle


def main() -> int:
    for n in (1, 2, 3):
        table = oracle.minimal_cost_table(oracle.build_universe(n))
        u = table.universe
        print(f"n = {n}: {len(u.words)} words, "
              f"{(1 << len(u.words)) - 1} expressible languages")
        spread = Counter(int(c) for c in table.costs[1:])
        line = ", ".join(f"{cost}:{count}" for cost, count in sorted(spread.items()))
        print(f"  languages by minimal cost: {line}")
        report = oracle.check_main_opt(n)
        for k, value, ratio in report.rows:
            marker = " <-- tightest" if k == report.tightest_k else ""
            print(f"  ell({n},{k}) = {value:3d}   ratio {ratio!s:>6}{marker}")
        verdict = "matches" if report.matches_f else "DOES NOT match"
        print(f"  cost(P_{n}) {verdict} f({n}) = {lengths.f(n)}; "
              f"semantics: {report.semantics}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
