#!/usr/bin/env python3
"""Print joint (area, dinv) tables for a range of coprime pairs.

Usage: python scripts/qt_scan.py [--max-m 5] [--max-n 5] [--over parking]

For each table the marginals are compared: the area and dinv columns are
equidistributed, which is visible as identical sorted marginals.
"""

import argparse
from math import gcd

from ratpark import qt_table


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-m", type=int, default=5)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--over", choices=("parking", "dyck"), default="parking")
    args = parser.parse_args()

    for m in range(2, args.max_m + 1):
        for n in range(2, args.max_n + 1):
            if gcd(m, n) != 1:
                continue
            table = qt_table(m, n, args.over)
            print(f"== ({m},{n}) over {args.over}: {table.total} objects")
            print(table.to_csv(), end="")
            same = sorted(table.area_marginal()) == sorted(table.dinv_marginal())
            print(f"   marginals equidistributed: {same}")
            print()


if __name__ == "__main__":
    main()
