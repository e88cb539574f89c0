"""Two-rail layout for arbitrary ternary trees.

The tree is split along heavy paths into two horizontal rails P (upper) and Q
(lower) joined by a single vertical edge at the turn index x; off-rail
subtrees are drawn recursively and attached above (rotated 180°) or below
their rail parent. The resulting drawing is planar, top-visible, at most n
columns wide, and at most 2*n^c - 1 rows tall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .geometry import GridDrawing
from .tree import HeavyOrder, TernaryTree, heavy_order, heavy_path, subtree_sizes


@dataclass(frozen=True)
class LayoutParams:
    """Threshold divisor p for the turn index; the height exponent c follows."""

    p: float = 9.956

    def __post_init__(self) -> None:
        if not self.p > 4:
            raise ValueError("p must be > 4")

    @property
    def c(self) -> float:
        return 1.0 / math.log2(3 * self.p / (self.p - 1))


@dataclass
class RailDecomposition:
    """Rails and attachments for one recursion level rooted at ``root``.

    ``x`` is the turn index (None when the heavy path never turns down);
    internally the undefined case behaves like x = k(pi) + 1. ``top``/
    ``bottom`` map a rail node to the root of its attached subtree; top
    subtrees are drawn rotated 180° above the rail, bottom subtrees upright
    below it.
    """

    root: int
    n: int
    x: Optional[int]
    pi: tuple[int, ...]
    rho: tuple[int, ...] = ()
    sigma: tuple[int, ...] = ()
    tau: tuple[int, ...] = ()
    P: tuple[int, ...] = ()
    Q: tuple[int, ...] = ()
    top: dict[int, int] = field(default_factory=dict)
    bottom: dict[int, int] = field(default_factory=dict)

    @property
    def x_eff(self) -> int:
        return self.x if self.x is not None else len(self.pi) + 1


@dataclass(frozen=True)
class DecompositionStats:
    """Maximum attachment sizes: a/b over top/bottom subtrees of P, r/s over
    top/bottom subtrees of Q. a and b are None when x < 3 (no general P
    part exists)."""

    a: Optional[int]
    b: Optional[int]
    r: int
    s: int


def _turn_index(t: TernaryTree, pi: tuple[int, ...], sizes: list[int],
                threshold: float) -> Optional[int]:
    """Smallest 1-based i such that pi_i has at least two subtrees with at
    least ``threshold`` nodes each."""
    for i, v in enumerate(pi, start=1):
        big = sum(1 for c in t.children[v] if sizes[c] >= threshold)
        if big >= 2:
            return i
    return None


def _decompose(t: TernaryTree, root: int, sizes: list[int],
               order: HeavyOrder, p: float) -> RailDecomposition:
    n = sizes[root]
    pi = tuple(heavy_path(t, root, order))
    x = _turn_index(t, pi, sizes, n / p)
    k = len(pi)

    def hp_of(child: Optional[int]) -> tuple[int, ...]:
        return () if child is None else tuple(heavy_path(t, child, order))

    rho: tuple[int, ...] = ()
    sigma: tuple[int, ...] = ()
    tau: tuple[int, ...] = ()
    exception: Optional[int] = None  # rail node whose lightest subtree goes top

    if x == 1:
        tau = hp_of(order.second[pi[0]])
        P: tuple[int, ...] = ()
        Q = tuple(reversed(pi)) + tau
    elif x == 2:
        # the root plays both ends of P: its lightest subtree takes the
        # leftward rail slot the second-heaviest normally gets, while the
        # second-heaviest runs straight to the right
        rho = hp_of(order.lightest[pi[0]])
        sigma = hp_of(order.second[pi[0]])
        P = tuple(reversed(rho)) + (pi[0],) + sigma
        tau = hp_of(order.second[pi[1]])
        Q = tuple(reversed(pi[1:])) + tau
    else:
        x_eff = k + 1 if x is None else x
        rho = hp_of(order.second[pi[0]])
        sigma = hp_of(order.second[pi[x_eff - 2]])
        P = tuple(reversed(rho)) + pi[: x_eff - 1] + sigma
        if x is not None:
            tau = hp_of(order.second[pi[x_eff - 1]])
            Q = tuple(reversed(pi[x_eff - 1:])) + tau
            exception = pi[x_eff - 2]
        else:
            Q = ()

    rail = set(P) | set(Q)
    top: dict[int, int] = {}
    bottom: dict[int, int] = {}
    for v in rail:
        for c in t.children[v]:
            if c in rail:
                continue
            if c == order.lightest[v] and v != exception:
                bottom[v] = c
            else:
                top[v] = c
    return RailDecomposition(root, n, x, pi, rho, sigma, tau, P, Q, top, bottom)


def decompose(t: TernaryTree, params: Optional[LayoutParams] = None) -> RailDecomposition:
    if t.n < 2:
        raise ValueError("decompose needs a tree with at least 2 nodes")
    params = params or LayoutParams()
    sizes = subtree_sizes(t)
    return _decompose(t, t.root, sizes, heavy_order(t, sizes), params.p)


def decomposition_stats(d: RailDecomposition,
                        sizes: Optional[list[int]] = None,
                        t: Optional[TernaryTree] = None) -> DecompositionStats:
    """Attachment-size maxima. Needs the tree (or its size table) that
    produced ``d``; sizes are recomputed from ``t`` when omitted."""
    if sizes is None:
        if t is None:
            raise ValueError("pass the source tree or its subtree sizes")
        sizes = subtree_sizes(t)
    p_set = set(d.P)

    def attach_max(mapping: dict[int, int], on_p: bool) -> int:
        vals = [sizes[c] for v, c in mapping.items() if (v in p_set) == on_p]
        return max(vals, default=0)

    general = d.x is None or d.x >= 3
    a = attach_max(d.top, True) if general else None
    b = attach_max(d.bottom, True) if general else None
    r = attach_max(d.top, False)
    s = attach_max(d.bottom, False)
    return DecompositionStats(a, b, r, s)


def all_decompositions(t: TernaryTree,
                       params: Optional[LayoutParams] = None
                       ) -> Iterator[RailDecomposition]:
    """Every decomposition the layout recursion would perform, top-down."""
    params = params or LayoutParams()
    sizes = subtree_sizes(t)
    order = heavy_order(t, sizes)
    stack = [t.root]
    while stack:
        v = stack.pop()
        if t.is_leaf(v):
            continue
        d = _decompose(t, v, sizes, order, params.p)
        yield d
        stack.extend(d.top.values())
        stack.extend(d.bottom.values())


class _Cluster:
    """A rail node plus its attached subtree drawings, in coordinates
    relative to the rail node at (0, 0)."""

    __slots__ = ("node", "pos", "lo", "hi", "ymax")

    def __init__(self, node: int):
        self.node = node
        self.pos: dict[int, tuple[int, int]] = {node: (0, 0)}
        self.lo = self.hi = 0
        self.ymax = 0

    def attach(self, child: int, sub: dict[int, tuple[int, int]], top: bool) -> None:
        if top:
            sub = {u: (-px, -py) for u, (px, py) in sub.items()}
        cx, cy = sub[child]
        dx = -cx
        if top:
            dy = -1 - max(py for _, py in sub.values())
        else:
            dy = 1 - min(py for _, py in sub.values())
        for u, (px, py) in sub.items():
            qx, qy = px + dx, py + dy
            self.pos[u] = (qx, qy)
            self.lo = min(self.lo, qx)
            self.hi = max(self.hi, qx)
            self.ymax = max(self.ymax, qy)


def _layout(t: TernaryTree, root: int, sizes: list[int], order: HeavyOrder,
            p: float) -> dict[int, tuple[int, int]]:
    if t.is_leaf(root):
        return {root: (0, 0)}
    d = _decompose(t, root, sizes, order, p)

    def cluster(v: int) -> _Cluster:
        c = _Cluster(v)
        if v in d.top:
            c.attach(d.top[v], _layout(t, d.top[v], sizes, order, p), top=True)
        if v in d.bottom:
            c.attach(d.bottom[v], _layout(t, d.bottom[v], sizes, order, p), top=False)
        return c

    pos: dict[int, tuple[int, int]] = {}

    def emit(c: _Cluster, col: int, row: int) -> None:
        for u, (px, py) in c.pos.items():
            pos[u] = (px + col, py + row)

    # upper rail, left to right on row 0
    p_clusters = [cluster(v) for v in d.P]
    cols: dict[int, int] = {}
    col = 0
    for i, c in enumerate(p_clusters):
        if i > 0:
            prev = p_clusters[i - 1]
            col = cols[prev.node] + prev.hi - c.lo + 1
        cols[c.node] = col
        emit(c, col, 0)

    if not d.Q:
        return pos

    p_bottom = max((c.ymax for c in p_clusters), default=-1)
    y_q = p_bottom + 1

    q_clusters = [cluster(v) for v in d.Q]
    n_tau = len(d.tau)
    xi = len(d.Q) - n_tau - 1  # index of pi_x within Q
    px_cluster = q_clusters[xi]
    if d.P:
        # pi_x hangs directly below pi_{x-1}
        cols[px_cluster.node] = cols[d.P[-1 - len(d.sigma)]]
    else:
        cols[px_cluster.node] = 0
    emit(px_cluster, cols[px_cluster.node], y_q)

    guarded = p_clusters + [px_cluster]
    left_min = min(cols[c.node] + c.lo for c in guarded)
    right_max = max(cols[c.node] + c.hi for c in guarded)

    # pi_{x+1} .. pi_k extend leftward; pi_{x+1} clears everything above
    for i in range(xi - 1, -1, -1):
        c = q_clusters[i]
        if i == xi - 1:
            col = left_min - 1 - c.hi
        else:
            nxt = q_clusters[i + 1]
            col = cols[nxt.node] + nxt.lo - c.hi - 1
        cols[c.node] = col
        emit(c, col, y_q)

    # tau extends rightward; tau_1 clears everything above
    for i in range(xi + 1, len(q_clusters)):
        c = q_clusters[i]
        if i == xi + 1:
            col = right_max + 1 - c.lo
        else:
            prev = q_clusters[i - 1]
            col = cols[prev.node] + prev.hi - c.lo + 1
        cols[c.node] = col
        emit(c, col, y_q)

    return pos


def draw_general(t: TernaryTree, params: Optional[LayoutParams] = None) -> GridDrawing:
    """Planar straight-line orthogonal grid drawing of an arbitrary ternary
    tree with the top-visibility property, width at most n, and height at
    most 2*n^c - 1."""
    params = params or LayoutParams()
    sizes = subtree_sizes(t)
    order = heavy_order(t, sizes)
    raw = _layout(t, t.root, sizes, order, params.p)
    rx, ry = raw[t.root]
    return GridDrawing(t, tuple((raw[v][0] - rx, raw[v][1] - ry) for v in range(t.n)))
