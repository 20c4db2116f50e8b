"""Good spanning trees of plane graphs.

A spanning tree ``T`` rooted at an outer vertex ``r`` is *good* when

* no non-tree edge joins a vertex to one of its proper ancestors, and
* around every vertex ``v``, clockwise from the edge to its parent, the
  incident edges read ``X_v`` (non-tree edges into subtrees hanging to the
  left of the root path), then ``Y_v`` (the tree edges to the children), then
  ``Z_v`` (non-tree edges into subtrees hanging to the right).

Left and right are fixed by the counterclockwise postorder: a vertex is to
the left of ``v`` when it comes later in the postorder without being an
ancestor of ``v``, and to the right when it comes before every vertex of the
subtree of ``v``.  For the root the parent edge is replaced by the outer
corner just clockwise of the reference edge ``(r, s)``.

:func:`build_good_spanning_tree` first runs a breadth-first construction
that re-embeds components hanging inside the cycles closed by non-tree
edges.  When that does not yield a good tree, the tree is assembled block by
block with an exact re-embedding search instead, which gives up the
breadth-first property.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Optional

from . import _reembed
from .plane_graph import (
    Component,
    PlaneGraph,
    PlaneGraphError,
    cut_vertices,
    edge,
    face_index,
    move_components_outside,
    outer_boundary,
    outer_vertices,
    validate,
)


class GoodTreeError(ValueError):
    """Raised for a bad root or when no good spanning tree could be built."""


class EdgeClass(str, Enum):
    TREE = "tree"
    NON_TREE = "non_tree"


@dataclass(frozen=True)
class Partition:
    """The sets ``X_v``, ``Y_v``, ``Z_v`` as neighbour tuples, each in clockwise order."""

    x: tuple[int, ...] = ()
    y: tuple[int, ...] = ()
    z: tuple[int, ...] = ()


@dataclass(frozen=True)
class GoodSpanningTree:
    root: int
    parent: tuple[Optional[int], ...]
    children_order: tuple[tuple[int, ...], ...]
    edge_class: Mapping[frozenset, EdgeClass]
    reference_edge: Optional[tuple[int, int]]
    partitions: tuple[Partition, ...]
    construction: str = "bfs"

    @property
    def n(self) -> int:
        return len(self.parent)

    def is_tree_edge(self, u: int, v: int) -> bool:
        return self.edge_class.get(edge(u, v)) is EdgeClass.TREE

    def tree_edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in enumerate(self.parent) if p is not None]

    def non_tree_edges(self) -> list[tuple[int, int]]:
        out = [tuple(sorted(e)) for e, c in self.edge_class.items() if c is EdgeClass.NON_TREE]
        return sorted(out)

    def levels(self) -> list[int]:
        """Depth of every vertex, the root at depth 0."""
        lev = [0] * self.n
        for v in _preorder(self):
            p = self.parent[v]
            if p is not None:
                lev[v] = lev[p] + 1
        return lev

    @classmethod
    def from_parent(
        cls,
        g: PlaneGraph,
        root: int,
        parent,
        s: Optional[int],
        construction: str = "bfs",
    ) -> GoodSpanningTree:
        """Derive child orders, edge classes and partitions from a parent map."""
        n = g.n
        par = tuple(None if v == root else parent[v] for v in range(n))
        children: list[tuple[int, ...]] = []
        for v in range(n):
            ccw = _ccw_from_reference(g, v, par[v], s if v == root else None)
            children.append(tuple(w for w in ccw if w != root and par[w] == v))
        classes = {}
        for u, v in g.edges():
            tree = par[v] == u or par[u] == v
            classes[edge(u, v)] = EdgeClass.TREE if tree else EdgeClass.NON_TREE
        proto = cls(root, par, tuple(children), classes, None if s is None else (root, s), (), construction)
        post, lo = _post_intervals(proto)
        parts = []
        for v in range(n):
            xs, ys, zs = [], [], []
            for w in reversed(_ccw_from_reference(g, v, par[v], s if v == root else None)):
                if par[w] == v:
                    ys.append(w)
                elif post[w] > post[v]:
                    xs.append(w)
                else:
                    zs.append(w)
            parts.append(Partition(tuple(xs), tuple(ys), tuple(zs)))
        return cls(root, par, tuple(children), classes, proto.reference_edge, tuple(parts), construction)


@dataclass(frozen=True)
class GroupStep:
    """At path vertex ``u`` the path continues to ``next``; ``left``/``right`` in clockwise order."""

    u: int
    next: int
    left: tuple[int, ...]
    right: tuple[int, ...]


@dataclass(frozen=True)
class LeftRightGroups:
    vertex: int
    path: tuple[int, ...]
    steps: tuple[GroupStep, ...]


@dataclass(frozen=True)
class Violation:
    vertex: int
    condition: str
    detail: str = ""


@dataclass
class VerificationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    def conditions(self) -> set[str]:
        return {v.condition for v in self.violations}

    def add(self, vertex: int, condition: str, detail: str = "") -> None:
        self.violations.append(Violation(vertex, condition, detail))


# traversals ----------------------------------------------------------------


def _ccw_from_reference(g: PlaneGraph, v: int, parent: Optional[int], s: Optional[int]) -> list[int]:
    """Neighbours of ``v`` counterclockwise, after the parent (or from ``s`` at the root)."""
    r = g.rotation[v]
    if not r:
        return []
    if parent is not None:
        i = g.position(v, parent)
        return list(r[i + 1:] + r[:i])
    i = g.position(v, s) if s is not None else 0
    return list(r[i:] + r[:i])


def _preorder(t: GoodSpanningTree) -> list[int]:
    out = []
    stack = [t.root]
    while stack:
        v = stack.pop()
        out.append(v)
        stack.extend(reversed(t.children_order[v]))
    return out


def ccw_postorder(t: GoodSpanningTree) -> list[int]:
    """Children in counterclockwise order, the subtree of ``s`` first, the root last."""
    out = []
    stack = [(t.root, 0)]
    while stack:
        v, i = stack.pop()
        kids = t.children_order[v]
        if i < len(kids):
            stack.append((v, i + 1))
            stack.append((kids[i], 0))
        else:
            out.append(v)
    return out


def _post_intervals(t: GoodSpanningTree) -> tuple[list[int], list[int]]:
    """Postorder index of each vertex and the smallest index in its subtree."""
    post = [0] * t.n
    lo = [0] * t.n
    for i, v in enumerate(ccw_postorder(t)):
        post[v] = i
        kids = t.children_order[v]
        lo[v] = lo[kids[0]] if kids else i
    return post, lo


def tree_path(t: GoodSpanningTree, v: int) -> list[int]:
    """Vertices of the tree path from the root to ``v``."""
    path = [v]
    while t.parent[path[-1]] is not None:
        path.append(t.parent[path[-1]])
    return path[::-1]


def left_right_groups(t: GoodSpanningTree, v: int) -> LeftRightGroups:
    """Children hanging left and right of the root path to ``v``."""
    path = tree_path(t, v)
    steps = []
    for u, nxt in zip(path, path[1:]):
        kids = t.children_order[u]
        k = kids.index(nxt)
        steps.append(GroupStep(u, nxt, tuple(reversed(kids[k + 1:])), tuple(reversed(kids[:k]))))
    return LeftRightGroups(v, tuple(path), tuple(steps))


# verification --------------------------------------------------------------


def verify_good_tree(g: PlaneGraph, t: GoodSpanningTree) -> VerificationReport:
    """Check the tree structure, the reference edge and both goodness conditions."""
    rep = VerificationReport()
    n = g.n
    if t.n != n or len(t.children_order) != n or not 0 <= t.root < n:
        rep.add(t.root, "spanning", "tree and graph sizes differ")
        return rep
    r = t.root
    if t.parent[r] is not None:
        rep.add(r, "spanning", "root has a parent")
    for v in range(n):
        p = t.parent[v]
        if v != r and (p is None or not 0 <= p < n or not g.has_edge(v, p)):
            rep.add(v, "spanning", f"parent {p} is not a neighbour")
    if not rep.ok:
        return rep
    # every parent chain must reach the root
    state = [0] * n
    state[r] = 2
    for v in range(n):
        chain = []
        u = v
        while state[u] == 0:
            state[u] = 1
            chain.append(u)
            u = t.parent[u]
        if state[u] == 1:
            rep.add(v, "spanning", "parent pointers form a cycle")
            return rep
        for w in chain:
            state[w] = 2
    s = t.reference_edge[1] if t.reference_edge is not None else None
    if n > 1:
        if t.reference_edge is None or t.reference_edge[0] != r or t.parent[s] != r:
            rep.add(r, "reference", "reference edge is not a tree edge at the root")
            return rep
        if (s, r) not in set(outer_boundary(g).darts):
            rep.add(r, "reference", "the corner before the reference edge is not on the outer face")
    for v in range(n):
        ccw = _ccw_from_reference(g, v, t.parent[v], s if v == r else None)
        kids = tuple(w for w in ccw if w != r and t.parent[w] == v)
        if tuple(t.children_order[v]) != kids:
            rep.add(v, "order", "children_order does not follow the rotation")
    for u, v in g.edges():
        want = EdgeClass.TREE if (t.parent[v] == u or t.parent[u] == v) else EdgeClass.NON_TREE
        if t.edge_class.get(edge(u, v)) is not want:
            rep.add(u, "classes", f"edge ({u}, {v}) should be {want.value}")
    if not rep.ok:
        return rep
    post, lo = _post_intervals(t)

    def ancestor(a: int, b: int) -> bool:
        return lo[a] <= post[b] < post[a]

    for v in range(n):
        for w in g.rotation[v]:
            if not t.is_tree_edge(v, w) and ancestor(w, v):
                rep.add(v, "cond1", f"non-tree edge to ancestor {w}")
    if len(t.partitions) != n:
        rep.add(r, "cond2b", "partitions missing")
        return rep
    for v in range(n):
        part = t.partitions[v]
        cw = list(reversed(_ccw_from_reference(g, v, t.parent[v], s if v == r else None)))
        if list(part.x) + list(part.y) + list(part.z) != cw:
            rep.add(v, "cond2b", "X, Y, Z do not read clockwise from the parent edge")
        if any(t.is_tree_edge(v, w) for w in part.x + part.z):
            rep.add(v, "cond2a", "tree edge in X or Z")
        if any(not t.is_tree_edge(v, w) or t.parent[w] != v for w in part.y):
            rep.add(v, "cond2a", "Y holds an edge that is not to a child")
        for w in part.x:
            if not (post[w] > post[v] and not ancestor(w, v)):
                rep.add(v, "cond2c", f"X neighbour {w} is not in a left subtree")
        for w in part.z:
            if not post[w] < lo[v]:
                rep.add(v, "cond2c", f"Z neighbour {w} is not in a right subtree")
    return rep


def bfs_violations(g: PlaneGraph, t: GoodSpanningTree) -> list[tuple[int, int]]:
    """Edges whose endpoint depths in ``t`` differ by more than one."""
    lev = t.levels()
    return [(u, v) for u, v in g.edges() if abs(lev[u] - lev[v]) > 1]


def is_bfs_tree(g: PlaneGraph, t: GoodSpanningTree) -> bool:
    return not bfs_violations(g, t)


# construction --------------------------------------------------------------


def reference_neighbour(g: PlaneGraph, r: int) -> int:
    """The ``s`` whose dart ``(s, r)`` lies on the outer face, kept stable for the outer dart."""
    if g.outer is not None and g.outer[0] == r:
        return g.ccw_next(r, g.outer[1])
    for u, v in outer_boundary(g).darts:
        if u == r:
            return g.ccw_next(r, v)
    raise GoodTreeError(f"vertex {r} is not an outer vertex")


def _is_triangulation(g: PlaneGraph) -> bool:
    return g.n >= 4 and g.m == 3 * g.n - 6


class _BfsConstruction:
    """Breadth-first growth with re-embedding of components inside closed cycles."""

    def __init__(self, g: PlaneGraph, r: int):
        self.g = g
        self.r = r
        self.n = g.n
        self.parent: list[Optional[int]] = [None] * g.n
        self.depth = [0] * g.n
        self.visited = [False] * g.n
        self.forced: set[frozenset] = set()
        self.s = reference_neighbour(g, r)
        # simple triangulations are 3-connected: nothing can ever hang inside a cycle
        self.surgery = not _is_triangulation(g)
        self.cuts = cut_vertices(g) if self.surgery else set()
        self._where: Optional[dict] = None
        self.moves = 0
        self.relocated: list[frozenset] = []

    def may_hang(self, x: int, y: int) -> bool:
        """Whether anything can hang off ``x``, ``y`` or the pair ``{x, y}``.

        Cut vertices are a property of the abstract graph.  If ``{x, y}``
        separates a 2-connected plane graph beyond the edge ``xy``, every
        switch between the pieces around ``x`` is a corner of a distinct face
        through ``y``, so ``x`` and ``y`` share at least three faces.
        """
        if x in self.cuts or y in self.cuts:
            return True
        where = self.faces()[1]
        fx = {where[(x, w)] for w in self.g.rotation[x]}
        shared = {where[(y, w)] for w in self.g.rotation[y]} & fx
        return len(shared) >= 3

    def child_rank(self, z: int, c: int) -> int:
        """Position of child ``c`` counterclockwise around ``z``."""
        g = self.g
        d = g.degree(z)
        ref = self.s if z == self.r else self.parent[z]
        base = g.position(z, ref)
        off = (g.position(z, c) - base) % d
        return off if z == self.r else (off - 1) % d

    def lca_children(self, a: int, b: int):
        pa, pb = a, b
        while self.depth[pa] > self.depth[pb]:
            pa = self.parent[pa]
        while self.depth[pb] > self.depth[pa]:
            pb = self.parent[pb]
        if pa == pb:
            return None
        while self.parent[pa] != self.parent[pb]:
            pa, pb = self.parent[pa], self.parent[pb]
        return self.parent[pa], pa, pb

    def path_up(self, v: int, stop: int) -> list[int]:
        out = [v]
        while out[-1] != stop:
            out.append(self.parent[out[-1]])
        return out

    def non_tree(self, a: int, b: int) -> bool:
        """Handle the non-tree edge ``ab``; ``False`` when the construction is stuck."""
        found = self.lca_children(a, b)
        if found is None:
            return False
        z, ca, cb = found
        # y is to the right of x, so the edge is in Z at x and in X at y
        if self.child_rank(z, ca) > self.child_rank(z, cb):
            x, y = a, b
        else:
            x, y = b, a
        if self.surgery and self.may_hang(x, y):
            cycle = self.path_up(x, z) + self.path_up(y, z)[-2::-1]
            self.relocate(cycle, x, y)
        g = self.g
        for w in _between(g, x, self.parent[x], y, ccw=True):
            if self.parent[w] == x or self.parent[x] == w:
                return False
            self.forced.add(edge(x, w))
        for w in _between(g, y, self.parent[y], x, ccw=False):
            if self.parent[w] == y or self.parent[y] == w:
                return False
            self.forced.add(edge(y, w))
        return True

    def faces(self):
        if self._where is None:
            self._faces, self._where = face_index(self.g)
        return self._faces, self._where

    def relocate(self, cycle: list[int], x: int, y: int) -> None:
        """Move everything hanging inside ``cycle`` from ``x``, ``y`` or both out of it.

        A piece of the vertices strictly inside the cycle whose only links to
        the cycle are ``x`` and ``y`` is a component of ``g - {x, y}``, so it
        is an x-component, a y-component or an ``{x, y}``-split component.
        """
        g = self.g
        faces, where = self.faces()
        k = len(cycle)
        darts = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
        blocked = set(darts) | {(v, u) for u, v in darts}
        outer = where[g.outer]

        def flood(seed: int) -> Optional[set[int]]:
            side = {seed}
            todo = [seed]
            while todo:
                f = todo.pop()
                if f == outer:
                    return None
                for d in faces[f].darts:
                    if d not in blocked:
                        h = where[(d[1], d[0])]
                        if h not in side:
                            side.add(h)
                            todo.append(h)
            return side

        side = flood(where[darts[0]])
        if side is None:
            side = flood(where[(darts[0][1], darts[0][0])])
        if side is None:
            return
        on_cycle = set(cycle)
        inner = {u for f in side for u, _ in faces[f].darts} - on_cycle
        seen: set[int] = set()
        pick = []
        for v0 in sorted(inner):
            if v0 in seen:
                continue
            piece = {v0}
            seen.add(v0)
            todo = [v0]
            att: set[int] = set()
            while todo:
                u = todo.pop()
                for w in g.rotation[u]:
                    if w in on_cycle:
                        att.add(w)
                    elif w not in seen:
                        seen.add(w)
                        piece.add(w)
                        todo.append(w)
            if att <= {x, y} and self.r not in piece:
                order = tuple(a for a in (x, y) if a in att)
                edges = frozenset(edge(u, w) for u in piece for w in g.rotation[u])
                pick.append(Component(frozenset(piece | att), edges, order))
        if pick:
            self.g = move_components_outside(g, cycle, pick)
            self._where = None
            self.moves += len(pick)
            self.relocated.extend(c.vertices for c in pick)

    def run(self) -> Optional[tuple[PlaneGraph, list[Optional[int]], int]]:
        r = self.r
        self.visited[r] = True
        queue = deque([r])
        while queue:
            u = queue.popleft()
            for w in _ccw_from_reference(self.g, u, self.parent[u], self.s if u == r else None):
                if self.visited[w] or edge(u, w) in self.forced:
                    continue
                self.visited[w] = True
                self.parent[w] = u
                self.depth[w] = self.depth[u] + 1
                back = [v for v in _ccw_from_reference(self.g, w, u, None) if self.visited[v]]
                for v in back:
                    if not self.non_tree(w, v):
                        return None
                queue.append(w)
        if not all(self.visited):
            return None
        g = self.g
        return g, self.parent, self.s


def _between(g: PlaneGraph, v: int, start: int, stop: int, ccw: bool) -> list[int]:
    """Neighbours of ``v`` strictly between ``start`` and ``stop`` in the given sense."""
    r = g.rotation[v]
    d = len(r)
    i = g.position(v, start)
    step = 1 if ccw else -1
    out = []
    k = (i + step) % d
    while r[k] != stop:
        out.append(r[k])
        k = (k + step) % d
    return out


def _finish(g: PlaneGraph, r: int, parent, s: int, how: str):
    outer = (r, g.cw_next(r, s))
    gphi = PlaneGraph(g.rotation, outer, g.labels)
    t = GoodSpanningTree.from_parent(gphi, r, parent, s, how)
    if verify_good_tree(gphi, t):
        return gphi, t
    return None


def bfs_good_tree(g: PlaneGraph, r: int):
    """The breadth-first construction alone: ``(G_phi, T)`` or ``None``."""
    out = _BfsConstruction(g, r).run()
    return None if out is None else _finish(out[0], r, out[1], out[2], "bfs")


def reembedded_good_tree(g: PlaneGraph, r: int, budget_scale: int = 1):
    """The block-wise exact construction alone: ``(G_phi, T)`` or ``None``."""

    def solve_block(local, c):
        return _reembed.block_good_tree(local, c, g.n, budget_scale)

    out = _reembed.glue_blocks([list(x) for x in g.rotation], r, solve_block)
    if out is None:
        return None
    rot, parent, s = out
    gphi = PlaneGraph(tuple(tuple(x) for x in rot), (r, rot[r][rot[r].index(s) - 1]), g.labels)
    return _finish(gphi, r, parent, s, "reembed")


_ROOT_TRIES = 8


def build_good_spanning_tree(
    g: PlaneGraph, r: Optional[int] = None, prefer_bfs: bool = False
) -> tuple[PlaneGraph, GoodSpanningTree]:
    """Return a re-embedding ``G_phi`` of ``g`` and a good spanning tree of it.

    With ``r`` omitted the first vertex of the outer face walk is the root,
    and other outer vertices are tried when that root fails.  Forced non-tree
    edges can delay discovery, so the tree need not be a BFS tree; with
    ``prefer_bfs`` the remaining roots are also tried and the first result
    that is a BFS tree wins.
    """
    report = validate(g)
    if not report:
        raise PlaneGraphError(report.problems[0])
    if g.n == 1:
        t = GoodSpanningTree(0, (None,), ((),), {}, None, (Partition(),), "bfs")
        return g, t
    outer = outer_vertices(g)
    if r is not None:
        if r not in outer:
            raise GoodTreeError(f"root {r} is not an outer vertex")
        roots = [r]
    else:
        roots = []
        for u, _ in outer_boundary(g).darts:
            if u not in roots:
                roots.append(u)
        roots = roots[:_ROOT_TRIES]
    first = None
    for root in roots:
        res = bfs_good_tree(g, root)
        if res is not None:
            if not prefer_bfs or is_bfs_tree(*res):
                return res
            first = first or res
    if first is not None:
        return first
    for scale in (1, 4, 16):
        for root in roots:
            res = reembedded_good_tree(g, root, scale)
            if res is not None:
                return res
    raise GoodTreeError("no good spanning tree found")
