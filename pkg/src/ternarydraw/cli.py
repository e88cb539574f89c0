"""Command-line entry point: draw, tabulate, fit, verify.

Exit codes: 0 ok, 1 verification-negative, 2 user error, 3 internal error
(a construction produced a drawing that failed its own verification).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import pareto
from .geometry import GridDrawing, drawing_from_json, drawing_to_json, extents
from .layout_complete import draw_c1_only, draw_c2_only, draw_golden, draw_upper_1149
from .layout_general import LayoutParams, draw_general
from .render import RenderSpec, drawing_to_svg
from .tree import TernaryTree, TreeError, complete_height, random_ternary_tree, tree_from_json
from .verify import build_report, report_to_json


class UserError(Exception):
    pass


def _parse_treespec(spec: str) -> TernaryTree:
    kind, _, rest = spec.partition(":")
    try:
        if kind == "complete":
            from .tree import complete_tree
            return complete_tree(int(rest))
        if kind == "random":
            n, _, seed = rest.partition(":")
            return random_ternary_tree(int(n), int(seed) if seed else 0)
        if kind == "file":
            with open(rest) as f:
                return tree_from_json(json.load(f))
    except (ValueError, TreeError, OSError, KeyError) as e:
        raise UserError(f"bad tree spec {spec!r}: {e}") from e
    raise UserError(f"unknown tree spec kind {kind!r} "
                    "(expected complete:<h>, random:<n>:<seed>, or file:<path>)")


_COMPLETE_ONLY = {"c1", "c2", "golden-narrow", "golden-wide", "upper1149", "pareto-min"}


def _build(tree: TernaryTree, algo: str, cache_dir: str) -> GridDrawing:
    if algo == "general":
        return draw_general(tree, LayoutParams())
    h = complete_height(tree)
    if h is None:
        raise UserError(f"algorithm {algo!r} requires a complete ternary tree")
    if algo == "c1":
        return draw_c1_only(h)
    if algo == "c2":
        return draw_c2_only(h)
    if algo == "golden-narrow":
        return draw_golden(h)[0]
    if algo == "golden-wide":
        return draw_golden(h)[1]
    if algo == "upper1149":
        return draw_upper_1149(h)
    if algo == "pareto-min":
        _, pair = pareto.min_area(h, cache_dir)
        return pareto.reconstruct_drawing(h, pair, cache_dir)
    raise UserError(f"unknown algorithm {algo!r}")


def cmd_draw(args) -> int:
    tree = _parse_treespec(args.tree)
    drawing = _build(tree, args.algo, args.cache_dir)
    report = build_report(drawing)
    if not (report.planar and report.orthogonal and report.on_grid
            and report.top_visible):
        print("internal error: construction failed verification, refusing to write",
              file=sys.stderr)
        return 3
    if args.format == "svg":
        payload = drawing_to_svg(drawing, RenderSpec())
    else:
        payload = json.dumps(drawing_to_json(drawing), indent=2)
    if args.out:
        with open(args.out, "w") as f:
            f.write(payload + "\n")
    else:
        print(payload)
    ext = extents(drawing)
    print(f"nodes={tree.n} width={ext.width} height={ext.height} area={ext.area}",
          file=sys.stderr)
    return 0


def cmd_table(args) -> int:
    if not 1 <= args.h_max <= 20:
        raise UserError("h must be between 1 and 20")
    print(f"{'h':>3} {'n':>12} {'min area':>14}")
    for h in range(1, args.h_max + 1):
        area, _ = pareto.min_area(h, args.cache_dir)
        n = (3 ** h - 1) // 2
        print(f"{h:>3} {n:>12} {area:>14}")
    return 0


def _load_table(path: str) -> list[tuple[float, float]]:
    points = []
    try:
        with open(path) as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                toks = line.replace(",", " ").split()
                if len(toks) < 2:
                    raise ValueError(f"bad row: {line!r}")
                points.append((float(toks[-2]), float(toks[-1])))
    except (OSError, ValueError) as e:
        raise UserError(f"malformed table {path!r}: {e}") from e
    return points


def cmd_fit(args) -> int:
    if args.builtin:
        points = [(float(n), float(area)) for _, n, area in pareto.REFERENCE_AREA_TABLE]
    elif args.table:
        points = _load_table(args.table)
    else:
        raise UserError("pass a table path or --builtin")
    try:
        fit = pareto.fit_power_law(points)
    except ValueError as e:
        raise UserError(str(e)) from e
    print(f"a={fit.a:.6g} b={fit.b:.6g} c={fit.c:.6g} sse={fit.sse:.6g}")
    return 0


def cmd_verify(args) -> int:
    try:
        with open(args.drawing) as f:
            drawing = drawing_from_json(json.load(f))
    except (OSError, ValueError, KeyError, TreeError) as e:
        raise UserError(f"cannot read drawing {args.drawing!r}: {e}") from e
    report = build_report(drawing)
    print(report_to_json(report))
    return 0 if (report.planar and report.orthogonal and report.on_grid) else 1


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="ternarydraw",
                                 description="layout and verification of planar "
                                             "orthogonal ternary-tree drawings")
    ap.add_argument("--cache-dir", default="./cache",
                    help="frontier cache directory (default ./cache)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("draw", help="construct and emit a drawing")
    p.add_argument("tree", help="complete:<h> | random:<n>:<seed> | file:<path>")
    p.add_argument("--algo", default="general",
                   choices=["general", "c1", "c2", "golden-narrow", "golden-wide",
                            "upper1149", "pareto-min"])
    p.add_argument("--format", default="json", choices=["json", "svg"])
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("table", help="minimum 1-2 drawing areas per height")
    p.add_argument("h_max", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fit", help="fit a*n^b + c to an (n, area) table")
    p.add_argument("table", nargs="?", default=None)
    p.add_argument("--builtin", action="store_true",
                   help="use the embedded 20-row area table")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("verify", help="verify a drawing JSON file")
    p.add_argument("drawing")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UserError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
