#!/usr/bin/env python3
"""Recompute the minimum-area table for 1-2 drawings of complete ternary
trees and diff it against the embedded reference values."""

import argparse
import sys
import time

from ternarydraw.pareto import REFERENCE_AREA_TABLE, frontier, min_area


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--h-max", type=int, default=12)
    ap.add_argument("--cache-dir", default=None)
    args = ap.parse_args()

    reference = {h: area for h, _, area in REFERENCE_AREA_TABLE}
    print(f"{'h':>3} {'n':>12} {'frontier':>9} {'min area':>14} "
          f"{'reference':>14} {'time (s)':>9}")
    mismatches = 0
    for h in range(1, args.h_max + 1):
        t0 = time.perf_counter()
        area, _ = min_area(h, args.cache_dir)
        k = len(frontier(h, args.cache_dir).pairs)
        dt = time.perf_counter() - t0
        ref = reference.get(h)
        mark = "" if ref is None or ref == area else "  <-- MISMATCH"
        mismatches += bool(mark)
        print(f"{h:>3} {(3 ** h - 1) // 2:>12} {k:>9} {area:>14} "
              f"{ref if ref is not None else '-':>14} {dt:>9.2f}{mark}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
