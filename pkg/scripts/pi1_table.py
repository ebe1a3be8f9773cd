#!/usr/bin/env python3
"""Tabulate invariant factors of the truncated groups over small fields.

Usage:
    python scripts/pi1_table.py [--max-order 4096] [--oracle]

With --oracle every row is recomputed by brute-force enumeration and the
two answers are compared; a mismatch aborts with a nonzero exit code.
"""

import argparse
import sys
import time

from multiwitt import CoeffRing, pi1_truncated, witt_group_structure_brute
from multiwitt.series import exponents_below


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-order", type=int, default=4096)
    parser.add_argument("--oracle", action="store_true")
    args = parser.parse_args()

    print(f"{'n':>2} {'q':>3} {'d':>3} {'order':>8}  factors")
    for n in (1, 2, 3):
        for q in (2, 3, 4, 5, 8, 9):
            for d in range(2, 12):
                m = len([e for e in exponents_below(n, d) if sum(e) > 0])
                order = q**m
                if order > args.max_order:
                    break
                s = pi1_truncated(n, q, d)
                row = f"{n:>2} {q:>3} {d:>3} {order:>8}  {list(s.invariant_factors)}"
                if args.oracle:
                    t0 = time.time()
                    b = witt_group_structure_brute(CoeffRing.make(q), n, d)
                    ok = b.invariant_factors == s.invariant_factors
                    row += f"  oracle={'ok' if ok else 'MISMATCH'} ({time.time()-t0:.2f}s)"
                    if not ok:
                        print(row)
                        return 2
                print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
