#!/usr/bin/env python3
"""Benchmark the general layout and report measured height against the
2*n^c - 1 bound across tree sizes."""

import argparse
import math
import time

from ternarydraw.geometry import extents
from ternarydraw.layout_general import LayoutParams, draw_general
from ternarydraw.tree import random_ternary_tree
from ternarydraw.verify import check_planar, check_top_visibility


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", type=int, nargs="+",
                    default=[100, 1000, 10000, 100000])
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--verify", action="store_true")
    args = ap.parse_args()

    params = LayoutParams()
    print(f"{'n':>8} {'layout (s)':>11} {'width':>8} {'height':>7} "
          f"{'bound':>7} {'ratio':>6}")
    for n in args.sizes:
        t_layout = 0.0
        worst_h = worst_ratio = 0
        worst_w = 0
        for seed in range(args.seeds):
            t = random_ternary_tree(n, seed)
            t0 = time.perf_counter()
            d = draw_general(t, params)
            t_layout += time.perf_counter() - t0
            if args.verify:
                assert check_planar(d) and check_top_visibility(d)
            e = extents(d)
            bound = max(1, math.ceil(2 * n ** params.c - 1))
            if e.height / bound > worst_ratio:
                worst_ratio = e.height / bound
                worst_h, worst_w = e.height, e.width
        bound = max(1, math.ceil(2 * n ** params.c - 1))
        print(f"{n:>8} {t_layout / args.seeds:>11.4f} {worst_w:>8} "
              f"{worst_h:>7} {bound:>7} {worst_ratio:>6.2f}")


if __name__ == "__main__":
    main()
