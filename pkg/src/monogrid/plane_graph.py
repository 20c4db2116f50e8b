"""Combinatorial plane graphs stored as rotation systems.

Conventions used throughout the package:

* ``rotation[v]`` lists the neighbours of ``v`` in counterclockwise order.
* The face successor of the dart ``(u, v)`` is ``(v, w)`` where ``w`` is the
  neighbour preceding ``u`` in ``rotation[v]``.  Inner faces are therefore
  traced counterclockwise and the outer face clockwise.
* The outer face is the face traced from the designated dart ``outer``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Sequence

Dart = tuple[int, int]
Edge = frozenset


class PlaneGraphError(ValueError):
    """Raised when a rotation system is malformed or an operation is misused."""


def edge(u: int, v: int) -> frozenset:
    return frozenset((u, v))


@dataclass(frozen=True)
class PlaneGraph:
    """An immutable rotation system with a designated outer dart.

    ``outer`` is ``None`` only for the single-vertex graph.
    """

    rotation: tuple[tuple[int, ...], ...]
    outer: Optional[Dart] = None
    labels: Optional[tuple[str, ...]] = None
    _index: tuple[dict[int, int], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        rot = tuple(tuple(int(w) for w in nbrs) for nbrs in self.rotation)
        object.__setattr__(self, "rotation", rot)
        if self.outer is not None:
            object.__setattr__(self, "outer", (int(self.outer[0]), int(self.outer[1])))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        object.__setattr__(
            self, "_index", tuple({w: i for i, w in enumerate(nbrs)} for nbrs in rot)
        )

    @classmethod
    def from_rotation(
        cls,
        rotation: Sequence[Sequence[int]],
        outer: Optional[Dart] = None,
        labels: Optional[Sequence[str]] = None,
    ) -> PlaneGraph:
        """Build a graph; when ``outer`` is omitted the first dart of vertex 0 is used."""
        if outer is None and rotation and rotation[0]:
            outer = (0, rotation[0][0])
        return cls(tuple(tuple(r) for r in rotation), outer, None if labels is None else tuple(labels))

    # basic queries -------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.rotation)

    @property
    def m(self) -> int:
        return sum(len(r) for r in self.rotation) // 2

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._index[u]

    def position(self, u: int, v: int) -> int:
        """Index of ``v`` in ``rotation[u]``."""
        try:
            return self._index[u][v]
        except KeyError:
            raise PlaneGraphError(f"({u}, {v}) is not a dart") from None

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.rotation[u] if u < v]

    def darts(self) -> Iterator[Dart]:
        for u, nbrs in enumerate(self.rotation):
            for v in nbrs:
                yield (u, v)

    def ccw_next(self, u: int, v: int) -> int:
        """Neighbour following ``v`` counterclockwise around ``u``."""
        r = self.rotation[u]
        return r[(self.position(u, v) + 1) % len(r)]

    def cw_next(self, u: int, v: int) -> int:
        """Neighbour following ``v`` clockwise around ``u``."""
        r = self.rotation[u]
        return r[(self.position(u, v) - 1) % len(r)]

    def face_successor(self, dart: Dart) -> Dart:
        u, v = dart
        return (v, self.cw_next(v, u))

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def with_rotation(self, rotation: Sequence[Sequence[int]]) -> PlaneGraph:
        return PlaneGraph(tuple(tuple(r) for r in rotation), self.outer, self.labels)


# faces -------------------------------------------------------------------


@dataclass(frozen=True)
class FaceWalk:
    darts: tuple[Dart, ...]

    @property
    def vertices(self) -> list[int]:
        seen: dict[int, None] = {}
        for u, _ in self.darts:
            seen.setdefault(u)
        return list(seen)

    def __len__(self) -> int:
        return len(self.darts)


def _check_rotation(g: PlaneGraph) -> list[str]:
    problems = []
    for u, nbrs in enumerate(g.rotation):
        if len(set(nbrs)) != len(nbrs):
            problems.append(f"vertex {u} lists a neighbour twice")
        for v in nbrs:
            if v == u:
                problems.append(f"self-loop at {u}")
            elif not 0 <= v < g.n:
                problems.append(f"dart ({u}, {v}) points outside the vertex range")
            elif u not in g._index[v]:
                problems.append(f"dart ({u}, {v}) has no reverse dart ({v}, {u})")
    return problems


def trace_faces(g: PlaneGraph) -> list[FaceWalk]:
    """Partition all darts into face walks.

    The single-vertex graph has one (empty) face.
    """
    problems = _check_rotation(g)
    if problems:
        raise PlaneGraphError(problems[0])
    if g.m == 0:
        return [FaceWalk(())]
    seen: set[Dart] = set()
    faces = []
    for start in g.darts():
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            d = g.face_successor(d)
        faces.append(FaceWalk(tuple(walk)))
    return faces


def face_index(g: PlaneGraph) -> tuple[list[FaceWalk], dict[Dart, int]]:
    faces = trace_faces(g)
    where = {d: i for i, f in enumerate(faces) for d in f.darts}
    return faces, where


def face_of(g: PlaneGraph, dart: Dart) -> FaceWalk:
    walk = [dart]
    d = g.face_successor(dart)
    while d != dart:
        walk.append(d)
        d = g.face_successor(d)
    return FaceWalk(tuple(walk))


def outer_boundary(g: PlaneGraph) -> FaceWalk:
    if g.outer is None:
        return FaceWalk(())
    return face_of(g, g.outer)


def outer_vertices(g: PlaneGraph) -> set[int]:
    if g.outer is None:
        return {0} if g.n else set()
    return {u for u, _ in outer_boundary(g).darts}


# validation --------------------------------------------------------------


@dataclass
class ValidationReport:
    problems: list[str] = field(default_factory=list)
    faces: int = 0

    @property
    def valid(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.valid


def is_connected(g: PlaneGraph) -> bool:
    if g.n == 0:
        return False
    seen = {0}
    todo = [0]
    while todo:
        u = todo.pop()
        for v in g.rotation[u]:
            if 0 <= v < g.n and v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == g.n


def validate(g: PlaneGraph) -> ValidationReport:
    """Check simplicity, symmetry, connectivity, the outer dart and Euler's formula."""
    report = ValidationReport()
    if g.n < 1:
        report.problems.append("graph has no vertices")
        return report
    report.problems.extend(_check_rotation(g))
    if not is_connected(g):
        report.problems.append("graph is disconnected")
    if g.outer is None:
        if g.m:
            report.problems.append("no outer dart designated")
    elif not (0 <= g.outer[0] < g.n and g.outer[1] in g._index[g.outer[0]]):
        report.problems.append(f"outer dart {g.outer} is not a dart of the graph")
    if report.problems:
        return report
    report.faces = len(trace_faces(g))
    if g.n - g.m + report.faces != 2:
        report.problems.append(
            f"Euler check failed: n - m + f = {g.n} - {g.m} + {report.faces} != 2"
        )
    return report


# connectivity ------------------------------------------------------------


def cut_vertices(g: PlaneGraph) -> set[int]:
    """Articulation points via an iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cuts: set[int] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, -1, iter(g.rotation[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(g.rotation[v])))
                    advanced = True
                    break
                if v != parent:
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cuts.add(parent)
        if root_children >= 2:
            cuts.add(root)
    return cuts


@dataclass(frozen=True)
class Component:
    vertices: frozenset
    edges: frozenset
    attachments: tuple[int, ...]


def _pieces_without(g: PlaneGraph, removed: set[int]) -> list[set[int]]:
    seen = set(removed)
    pieces = []
    for s in range(g.n):
        if s in seen:
            continue
        piece = {s}
        seen.add(s)
        todo = [s]
        while todo:
            u = todo.pop()
            for v in g.rotation[u]:
                if v not in seen:
                    seen.add(v)
                    piece.add(v)
                    todo.append(v)
        pieces.append(piece)
    return pieces


def _edges_touching(g: PlaneGraph, piece: set[int]) -> frozenset:
    return frozenset(edge(u, v) for u in piece for v in g.rotation[u])


def v_components(g: PlaneGraph, v: int) -> list[Component]:
    """One component per piece of ``g - v``, re-attached to ``v``."""
    out = []
    for piece in _pieces_without(g, {v}):
        out.append(Component(frozenset(piece | {v}), _edges_touching(g, piece), (v,)))
    return out


def split_components(g: PlaneGraph, u: int, v: int) -> list[Component]:
    """The ``{u, v}``-split components, or ``[]`` when ``{u, v}`` is not a split pair.

    Pieces of ``g - {u, v}`` are re-attached to whichever of ``u``, ``v`` they
    touch; a piece touching neither of them cannot occur in a connected graph.
    The edge ``(u, v)`` forms its own component.
    """
    if u == v:
        raise PlaneGraphError("split pair needs two distinct vertices")
    comps = []
    for piece in _pieces_without(g, {u, v}):
        att = tuple(a for a in (u, v) if any(a in g._index[w] for w in piece))
        comps.append(Component(frozenset(piece | set(att)), _edges_touching(g, piece), att))
    if g.has_edge(u, v):
        comps.append(Component(frozenset((u, v)), frozenset({edge(u, v)}), (u, v)))
    if len(comps) < 2:
        return []
    return comps


# cycles and surgery ------------------------------------------------------


def _cycle_darts(g: PlaneGraph, cycle: Sequence[int]) -> list[Dart]:
    k = len(cycle)
    if k < 3 or len(set(cycle)) != k:
        raise PlaneGraphError("a cycle needs at least three distinct vertices")
    darts = [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]
    for u, v in darts:
        if not g.has_edge(u, v):
            raise PlaneGraphError(f"({u}, {v}) is not an edge, so {list(cycle)} is not a cycle")
    return darts


def _side_faces(g: PlaneGraph, cycle: Sequence[int]) -> tuple[set[int], set[int], list[FaceWalk], dict[Dart, int]]:
    """Faces left and right of the directed cycle."""
    darts = _cycle_darts(g, cycle)
    faces, where = face_index(g)
    blocked = set(darts) | {(v, u) for u, v in darts}

    def flood(seed: int) -> set[int]:
        side = {seed}
        todo = [seed]
        while todo:
            f = todo.pop()
            for d in faces[f].darts:
                if d in blocked:
                    continue
                h = where[(d[1], d[0])]
                if h not in side:
                    side.add(h)
                    todo.append(h)
        return side

    left = flood(where[darts[0]])
    right = flood(where[(darts[0][1], darts[0][0])])
    return left, right, faces, where


def subgraph_inside_cycle(g: PlaneGraph, cycle: Sequence[int]) -> Component:
    """Everything on or inside ``cycle``; inside is the side away from the outer face."""
    left, right, faces, where = _side_faces(g, cycle)
    outer_face = where[g.outer]
    inside = right if outer_face in left else left
    verts = set(cycle)
    edges = set()
    for f in inside:
        for u, v in faces[f].darts:
            verts.add(u)
            edges.add(edge(u, v))
    return Component(frozenset(verts), frozenset(edges), tuple(cycle))


def move_component_outside(g: PlaneGraph, cycle: Sequence[int], h: Component) -> PlaneGraph:
    """Re-embed ``h`` on the outer side of ``cycle``; see :func:`move_components_outside`."""
    return move_components_outside(g, cycle, [h])


def move_components_outside(
    g: PlaneGraph, cycle: Sequence[int], comps: Iterable[Component]
) -> PlaneGraph:
    """Re-embed components hanging inside ``cycle`` on its outer side.

    Each component touches the cycle only at its attachment vertices.  At an
    attachment ``a`` the component's darts leave the inner arc of
    ``rotation[a]`` and are reinserted, keeping their cyclic order, in the
    outer arc.  A component attached at both ends of a cycle edge ``(p, q)``
    is laid beside that edge; several components moved at once keep their
    relative order.
    """
    comps = [h for h in comps if h.edges]
    if not comps:
        return g
    k = len(cycle)
    left, right, faces, where = _side_faces(g, cycle)
    outer_face = where[g.outer]
    inside_faces = right if outer_face in left else left
    inside_edges = {edge(u, v) for f in inside_faces for u, v in faces[f].darts}
    # orient the cycle counterclockwise: the inside lies to its left
    order = list(cycle) if outer_face not in left else list(reversed(cycle))
    idx = {c: i for i, c in enumerate(order)}
    moving_at: dict[int, set[int]] = {}
    after_pred: set[int] = set()
    for h in comps:
        att = tuple(h.attachments)
        if not att or any(a not in idx for a in att):
            raise PlaneGraphError("attachments must lie on the cycle")
        if not h.edges <= inside_edges:
            raise PlaneGraphError("component is not inside the cycle")
        cyc_edges = {edge(order[i], order[(i + 1) % k]) for i in range(k)}
        for a in att:
            ws = {w for w in g.rotation[a] if edge(a, w) in h.edges and edge(a, w) not in cyc_edges}
            moving_at.setdefault(a, set()).update(ws)
        if len(att) == 2:
            p, q = att
            if order[(idx[p] + 1) % k] == q:
                after_pred.add(q)
            elif order[(idx[q] + 1) % k] == p:
                after_pred.add(p)
    rotation = [list(r) for r in g.rotation]
    for a, ws in moving_at.items():
        if not ws:
            continue
        i = idx[a]
        succ, pred = order[(i + 1) % k], order[(i - 1) % k]
        nbrs = rotation[a]
        start = nbrs.index(succ)
        seq = nbrs[start + 1 :] + nbrs[:start]
        moving = [w for w in seq if w in ws]
        rest = [w for w in nbrs if w not in ws]
        # the outer arc at a runs counterclockwise from pred to succ
        pos = rest.index(pred) + 1 if a in after_pred else rest.index(succ)
        rest[pos:pos] = moving
        rotation[a] = rest
    return g.with_rotation(rotation)
