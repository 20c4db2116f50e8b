"""Monotone grid drawing of a plane graph with a good spanning tree.

The tree is drawn first; then each non-tree edge ``(x, y)`` is drawn as a
vertical segment on a fresh grid line just right of the drawing, after
stretching the tree edges into ``x`` and ``y`` along their slopes until both
endpoints reach that line.  Edges are inserted in the reverse of an order
that repeatedly peels a non-tree edge off the outer face, so the outermost
edge lands furthest right.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .good_tree import GoodSpanningTree, ccw_postorder
from .plane_graph import PlaneGraph, outer_boundary
from .tree_layout import GridDrawing, assign_slopes, draw_tree, preorder


class LayoutError(RuntimeError):
    """The planner got stuck or a stepwise re-check failed."""


@dataclass(frozen=True)
class PlannedEdge:
    x: int
    y: int
    lca: int


@dataclass(frozen=True)
class InsertionPlan:
    order: tuple[PlannedEdge, ...]

    def __len__(self) -> int:
        return len(self.order)


def _lca(t: GoodSpanningTree, depth: list[int], a: int, b: int) -> int:
    while depth[a] > depth[b]:
        a = t.parent[a]
    while depth[b] > depth[a]:
        b = t.parent[b]
    while a != b:
        a, b = t.parent[a], t.parent[b]
    return a


def plan_insertions(g: PlaneGraph, t: GoodSpanningTree) -> InsertionPlan:
    """Reverse of a peeling order that always removes a non-tree edge of the outer face.

    Removing an edge of the outer face merges the face on its other side
    into the outer face, so the outer face only ever gains darts and each
    inner face is walked once, when it is merged.

    Among the outer candidates an edge is preferred when no remaining
    non-tree edge has an endpoint strictly below either of its endpoints.
    Drawn in reverse, every edge is then inserted before any edge at a
    proper descendant of its endpoints, so later shifts never bend it away
    from the tree edge it shares a vertex with.
    """
    nontree = {tuple(e) for e in t.non_tree_edges()}
    if not nontree:
        return InsertionPlan(())
    n = t.n
    rot = [list(r) for r in g.rotation]
    outer: set[tuple[int, int]] = set(outer_boundary(g).darts)
    # below[v]: remaining non-tree endpoints in the subtree of v, v excluded
    below = [0] * n
    for e in nontree:
        for w in e:
            a = t.parent[w]
            while a is not None:
                below[a] += 1
                a = t.parent[a]
    free: deque[tuple[int, int]] = deque()
    waiting: deque[tuple[int, int]] = deque()
    pending: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    queued: set[tuple[int, int]] = set()
    done: set[tuple[int, int]] = set()

    def settle(e: tuple[int, int]) -> None:
        if below[e[0]] == 0 and below[e[1]] == 0:
            free.append(e)
        else:
            waiting.append(e)
            for w in e:
                if below[w]:
                    pending[w].append(e)

    def offer(u: int, v: int) -> None:
        e = (u, v) if u < v else (v, u)
        if e in nontree and e not in queued:
            queued.add(e)
            settle(e)

    for u, v in outer_boundary(g).darts:
        offer(u, v)
    removed = []
    while free or waiting:
        if free:
            e = free.popleft()
        else:
            e = waiting.popleft()
        if e in done:
            continue
        done.add(e)
        u, v = e
        inner = (v, u) if (u, v) in outer else (u, v)
        outer.discard((u, v))
        outer.discard((v, u))
        if inner not in outer:
            # walk the face on the other side before the edge disappears
            a, b = inner
            walk = []
            while True:
                r = rot[b]
                c = r[(r.index(a) - 1) % len(r)]
                a, b = b, c
                if (a, b) == inner:
                    break
                walk.append((a, b))
            for dart in walk:
                if dart not in outer:
                    outer.add(dart)
                    offer(*dart)
        rot[u].remove(v)
        rot[v].remove(u)
        removed.append(e)
        for w in e:
            a = t.parent[w]
            while a is not None:
                below[a] -= 1
                if below[a] == 0 and pending[a]:
                    for f in pending[a]:
                        if f not in done and below[f[0]] == 0 and below[f[1]] == 0:
                            free.append(f)
                    pending[a] = []
                a = t.parent[a]
    if len(removed) != len(nontree):
        raise LayoutError("no non-tree edge left on the outer face while some remain")
    post = {v: i for i, v in enumerate(ccw_postorder(t))}
    depth = t.levels()
    order = []
    for u, v in reversed(removed):
        x, y = (u, v) if post[u] < post[v] else (v, u)
        order.append(PlannedEdge(x, y, _lca(t, depth, x, y)))
    return InsertionPlan(tuple(order))


def draw_graph(
    g: PlaneGraph,
    t: GoodSpanningTree,
    plan: Optional[InsertionPlan] = None,
    debug_stepwise: bool = False,
) -> GridDrawing:
    """Draw ``g`` on the grid: tree first, then each planned edge on a new vertical line."""
    slopes = assign_slopes(t)
    base = draw_tree(t, slopes)
    if plan is None:
        plan = plan_insertions(g, t)
    if not plan.order:
        return base
    n = t.n
    pre = preorder(t)
    at = [0] * n
    for i, v in enumerate(pre):
        at[v] = i
    size = [1] * n
    for v in reversed(pre):
        p = t.parent[v]
        if p is not None:
            size[p] += size[v]
    z = len(plan.order)
    big = (n - 1) * ((n - 1) + z) >= 1 << 62
    dtype = object if big else np.int64
    X = np.array([base.pos[v][0] for v in pre], dtype=dtype)
    Y = np.array([base.pos[v][1] for v in pre], dtype=dtype)
    cur_max = int(X.max())
    drawn: list[tuple[int, int]] = []
    for step, e in enumerate(plan.order):
        line = cur_max + 1
        for v in (e.x, e.y):
            lo, hi = at[v], at[v] + size[v]
            k = line - int(X[lo])
            if k:
                X[lo:hi] += k
                Y[lo:hi] += k * slopes[v]
            cur_max = max(cur_max, int(X[lo:hi].max()))
        drawn.append((e.x, e.y))
        if debug_stepwise:
            _recheck(g, t, X, Y, pre, drawn, step)
    pos = [(0, 0)] * n
    for i, v in enumerate(pre):
        pos[v] = (int(X[i]), int(Y[i]))
    return GridDrawing(tuple(pos))


def _recheck(g, t, X, Y, pre, drawn, step) -> None:
    from .verify import all_pairs_tree_monotone, check_no_crossings

    pos = [(0, 0)] * t.n
    for i, v in enumerate(pre):
        pos[v] = (int(X[i]), int(Y[i]))
    d = GridDrawing(tuple(pos))
    rot: list[list[int]] = [[] for _ in range(t.n)]
    for p, v in t.tree_edges():
        rot[p].append(v)
        rot[v].append(p)
    for x, y in drawn:
        rot[x].append(y)
        rot[y].append(x)
    partial = PlaneGraph(tuple(tuple(r) for r in rot), None)
    crossings = check_no_crossings(d, partial)
    if crossings:
        c = crossings[0]
        raise LayoutError(f"step {step}: edges {c.first} and {c.second} meet ({c.kind})")
    bad, _, _ = all_pairs_tree_monotone(d, t)
    if bad:
        raise LayoutError(f"step {step}: tree path {bad[0]} is not monotone")
