"""Grid drawings, rigid transforms, and extent measurement relative to the root.

Coordinate convention: x grows rightward, y grows DOWNWARD (SVG-style), so
"below the root" means larger y. Edges are implicit: each non-root node is
joined to its parent by an axis-parallel straight-line segment.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tree import TernaryTree, tree_from_json, tree_to_json


@dataclass(frozen=True)
class Extents:
    """Grid-line counts of a drawing, relative to its root.

    width/height count grid columns/rows intersecting the drawing;
    left_width counts the intersecting columns strictly left of the root,
    right_width those strictly right, and analogously top/bottom height.
    """

    width: int
    height: int
    left_width: int
    right_width: int
    top_height: int
    bottom_height: int

    @property
    def area(self) -> int:
        return self.width * self.height


@dataclass(frozen=True)
class BoundingBox:
    xmin: int
    xmax: int
    ymin: int
    ymax: int

    @property
    def width(self) -> int:
        return self.xmax - self.xmin + 1

    @property
    def height(self) -> int:
        return self.ymax - self.ymin + 1


@dataclass(frozen=True)
class GridDrawing:
    """Assignment of integer grid points to the nodes of a tree."""

    tree: TernaryTree
    pos: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pos) != self.tree.n:
            raise ValueError("one position per node required")

    def root_pos(self) -> tuple[int, int]:
        return self.pos[self.tree.root]


# 1-2 drawings carry no extra runtime state; the tag is semantic. The verify
# module checks the defining properties (top visibility, subtree separation).
OneTwoDrawing = GridDrawing


def edge_segments(d: GridDrawing) -> list[tuple[int, int, int, int]]:
    """(x1, y1, x2, y2) per tree edge, endpoint order following parent->child."""
    segs = []
    pos = d.pos
    for v, kids in enumerate(d.tree.children):
        x1, y1 = pos[v]
        for c in kids:
            x2, y2 = pos[c]
            segs.append((x1, y1, x2, y2))
    return segs


def translate(d: GridDrawing, dx: int, dy: int) -> GridDrawing:
    return GridDrawing(d.tree, tuple((x + dx, y + dy) for x, y in d.pos))


def rotate(d: GridDrawing, quarter_turns_cw: int) -> GridDrawing:
    """Rotate about the root's position by 90° clockwise steps (screen sense,
    y-down). The root keeps its position."""
    if quarter_turns_cw not in (1, 2, 3):
        raise ValueError("quarter_turns_cw must be 1, 2, or 3")
    px, py = d.root_pos()
    out = []
    for x, y in d.pos:
        dx, dy = x - px, y - py
        for _ in range(quarter_turns_cw):
            dx, dy = -dy, dx
        out.append((px + dx, py + dy))
    return GridDrawing(d.tree, tuple(out))


def _covered_counts(intervals: list[tuple[int, int]], pivot: int) -> tuple[int, int, int]:
    """Integer points covered by the union of closed intervals: total, strictly
    below pivot, strictly above pivot."""
    intervals.sort()
    total = below = above = 0
    cs, ce = intervals[0]
    merged = []
    for a, b in intervals[1:]:
        if a <= ce + 1:
            ce = max(ce, b)
        else:
            merged.append((cs, ce))
            cs, ce = a, b
    merged.append((cs, ce))
    for a, b in merged:
        total += b - a + 1
        below += max(0, min(b, pivot - 1) - a + 1)
        above += max(0, b - max(a, pivot + 1) + 1)
    return total, below, above


def extents(d: GridDrawing) -> Extents:
    """Exact grid-line counts; a column/row counts if it meets a node or any
    point of an edge segment."""
    rx, ry = d.root_pos()
    cols = [(x, x) for x, _ in d.pos]
    rows = [(y, y) for _, y in d.pos]
    for x1, y1, x2, y2 in edge_segments(d):
        if y1 == y2 and x1 != x2:
            cols.append((min(x1, x2), max(x1, x2)))
        elif x1 == x2 and y1 != y2:
            rows.append((min(y1, y2), max(y1, y2)))
        # diagonal edges contribute their endpoints only (already counted);
        # such drawings are invalid and rejected by the verifier anyway
    w, lw, rw = _covered_counts(cols, rx)
    h, th, bh = _covered_counts(rows, ry)
    return Extents(w, h, lw, rw, th, bh)


def bounding_box(d: GridDrawing, subtree_root: int) -> BoundingBox:
    """Tight box over the subtree's node positions and internal edges (the
    edge to the parent is excluded). Internal edges never leave the node
    hull, so the box over node positions is exact."""
    if not 0 <= subtree_root < d.tree.n:
        raise ValueError("subtree_root not in tree")
    stack = [subtree_root]
    x0, y0 = d.pos[subtree_root]
    xmin = xmax = x0
    ymin = ymax = y0
    while stack:
        v = stack.pop()
        x, y = d.pos[v]
        xmin = min(xmin, x)
        xmax = max(xmax, x)
        ymin = min(ymin, y)
        ymax = max(ymax, y)
        stack.extend(d.tree.children[v])
    return BoundingBox(xmin, xmax, ymin, ymax)


def drawing_to_json(d: GridDrawing) -> dict:
    return {"tree": tree_to_json(d.tree), "pos": [[x, y] for x, y in d.pos]}


def drawing_from_json(obj: dict) -> GridDrawing:
    tree = tree_from_json(obj["tree"])
    pos = tuple((int(p[0]), int(p[1])) for p in obj["pos"])
    return GridDrawing(tree, pos)
