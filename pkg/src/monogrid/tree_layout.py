"""Slope-disjoint drawing of a rooted ordered tree on the integer grid.

The ``i``-th vertex of the counterclockwise postorder gets the slope ``i``
(direction ``(1, i)``), so every subtree owns a contiguous block of slopes and
sibling blocks are ordered counterclockwise.  The root sits at the origin and
every child is placed one unit to the right of its parent along its slope.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .good_tree import GoodSpanningTree, ccw_postorder

Point = tuple[int, int]


@dataclass(frozen=True)
class SlopeAssignment:
    """``slope[v]`` is the integer ``k`` of direction ``(1, k)``; ``None`` at the root."""

    slope: tuple[Optional[int], ...]

    def __getitem__(self, v: int) -> Optional[int]:
        return self.slope[v]

    def __len__(self) -> int:
        return sum(1 for k in self.slope if k is not None)


@dataclass(frozen=True)
class GridDrawing:
    pos: tuple[Point, ...]

    def __getitem__(self, v: int) -> Point:
        return self.pos[v]

    @property
    def n(self) -> int:
        return len(self.pos)

    @property
    def width(self) -> int:
        if not self.pos:
            return 0
        xs = [p[0] for p in self.pos]
        return max(xs) - min(xs)

    @property
    def height(self) -> int:
        if not self.pos:
            return 0
        ys = [p[1] for p in self.pos]
        return max(ys) - min(ys)

    def with_positions(self, pos: Sequence[Point]) -> GridDrawing:
        return GridDrawing(tuple((int(x), int(y)) for x, y in pos))


def assign_slopes(t: GoodSpanningTree) -> SlopeAssignment:
    slope: list[Optional[int]] = [None] * t.n
    for i, v in enumerate(ccw_postorder(t)[:-1], start=1):
        slope[v] = i
    return SlopeAssignment(tuple(slope))


def preorder(t: GoodSpanningTree) -> list[int]:
    """Counterclockwise preorder from the root."""
    out = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(t.children_order[v]))
    return out


def draw_tree(t: GoodSpanningTree, s: Optional[SlopeAssignment] = None) -> GridDrawing:
    """Root at ``(0, 0)``; each child at its parent plus ``(1, slope)``."""
    if s is None:
        s = assign_slopes(t)
    pos: list[Point] = [(0, 0)] * t.n
    for v in preorder(t):
        p = t.parent[v]
        if p is not None:
            px, py = pos[p]
            pos[v] = (px + 1, py + s[v])
    return GridDrawing(tuple(pos))


def subtree(t: GoodSpanningTree, v: int) -> list[int]:
    out = []
    stack = [v]
    while stack:
        u = stack.pop()
        out.append(u)
        stack.extend(t.children_order[u])
    return out


def edge_slope(d: GridDrawing, t: GoodSpanningTree, v: int) -> int:
    """The integer slope of the drawn tree edge from the parent of ``v``."""
    p = t.parent[v]
    if p is None:
        raise ValueError("the root has no parent edge")
    dx = d.pos[v][0] - d.pos[p][0]
    dy = d.pos[v][1] - d.pos[p][1]
    if dx <= 0 or dy % dx:
        raise ValueError(f"edge ({p}, {v}) is not drawn along an integer slope")
    return dy // dx


def elongate_edge(d: GridDrawing, t: GoodSpanningTree, v: int, steps: int) -> GridDrawing:
    """Lengthen the edge into ``v`` by ``steps`` grid steps, moving the subtree of ``v`` rigidly."""
    if t.parent[v] is None:
        raise ValueError("cannot elongate at the root")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if steps == 0:
        return d
    k = edge_slope(d, t, v)
    dx, dy = steps, steps * k
    pos = list(d.pos)
    for u in subtree(t, v):
        x, y = pos[u]
        pos[u] = (x + dx, y + dy)
    return GridDrawing(tuple(pos))
