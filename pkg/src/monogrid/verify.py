"""Exact checkers for grid drawings: crossings, monotone paths and grid bounds.

Every decision uses integer arithmetic.  A path is monotone when all its
edge vectors lie in a common open half-plane; a positive answer comes with a
witness direction whose dot product with every edge vector is positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Iterable, Optional, Sequence

import numpy as np

from .good_tree import GoodSpanningTree
from .plane_graph import PlaneGraph
from .tree_layout import GridDrawing

Point = tuple[int, int]

ORACLE_MAX_N = 10


@dataclass(frozen=True)
class DirectionWitness:
    dx: int
    dy: int

    def certifies(self, vectors: Iterable[Point]) -> bool:
        if self.dx == 0 and self.dy == 0:
            return False
        return all(self.dx * x + self.dy * y > 0 for x, y in vectors)


@dataclass(frozen=True)
class Crossing:
    """Two drawn edges that meet improperly, or a vertex on a non-incident edge (``kind='vertex'``)."""

    first: tuple[int, ...]
    second: tuple[int, int]
    kind: str = "cross"


@dataclass
class VerificationReport:
    crossing_pairs: list[Crossing] = field(default_factory=list)
    non_monotone_pairs: list[tuple[int, int]] = field(default_factory=list)
    bound_violations: list[tuple[str, int, int]] = field(default_factory=list)
    coincident: list[tuple[int, int]] = field(default_factory=list)
    witness_directions: dict[tuple[int, int], DirectionWitness] = field(default_factory=dict)
    pairs_checked: int = 0

    @property
    def passed(self) -> bool:
        return not (self.crossing_pairs or self.non_monotone_pairs
                    or self.bound_violations or self.coincident)

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> dict:
        return {
            "passed": self.passed,
            "crossings": len(self.crossing_pairs),
            "non_monotone_pairs": len(self.non_monotone_pairs),
            "bound_violations": [list(b) for b in self.bound_violations],
            "coincident": len(self.coincident),
            "pairs_checked": self.pairs_checked,
        }


# monotone paths ------------------------------------------------------------


def _cross(a: Point, b: Point) -> int:
    return a[0] * b[1] - a[1] * b[0]


def _half(v: Point) -> int:
    return 0 if v[1] > 0 or (v[1] == 0 and v[0] > 0) else 1


def _angle_cmp(a: Point, b: Point) -> int:
    ha, hb = _half(a), _half(b)
    if ha != hb:
        return ha - hb
    c = _cross(a, b)
    return -1 if c > 0 else (1 if c < 0 else 0)


def half_plane_witness(vectors: Sequence[Point]) -> Optional[DirectionWitness]:
    """A direction with positive dot product against every vector, if one exists."""
    dirs = set()
    for x, y in vectors:
        if x == 0 and y == 0:
            return None
        g = gcd(x, y)
        dirs.add((x // g, y // g))
    if not dirs:
        return None
    order = sorted(dirs, key=cmp_to_key(_angle_cmp))
    if len(order) == 1:
        w = DirectionWitness(*order[0])
    else:
        w = None
        k = len(order)
        for i in range(k):
            u, v = order[i], order[(i + 1) % k]
            if _cross(u, v) < 0:
                # the gap from u to v exceeds a half turn: the cone runs from v to u
                a, b = v, u
                w = DirectionWitness(-a[1] + b[1], a[0] - b[0])
                break
        if w is None:
            return None
    return w if w.certifies(vectors) else None


def is_path_monotone(points: Sequence[Point]) -> Optional[DirectionWitness]:
    """Witness that the polyline through ``points`` is monotone, or ``None``."""
    vecs = [(b[0] - a[0], b[1] - a[1]) for a, b in zip(points, points[1:])]
    return half_plane_witness(vecs)


def tree_path_between(t: GoodSpanningTree, a: int, b: int) -> list[int]:
    up = [a]
    anc = {a}
    while t.parent[up[-1]] is not None:
        up.append(t.parent[up[-1]])
        anc.add(up[-1])
    down = [b]
    while down[-1] not in anc:
        down.append(t.parent[down[-1]])
    w = down[-1]
    return up[: up.index(w) + 1] + down[-2::-1]


def check_tree_path_monotone(d: GridDrawing, t: GoodSpanningTree, a: int, b: int) -> Optional[DirectionWitness]:
    return is_path_monotone([d.pos[v] for v in tree_path_between(t, a, b)])


def all_pairs_tree_monotone(
    d: GridDrawing, t: GoodSpanningTree, witnesses: bool = False
) -> tuple[list[tuple[int, int]], dict[tuple[int, int], DirectionWitness], int]:
    """Non-monotone tree-path pairs among all pairs ``a < b``.

    When every tree edge points rightwards (``dx > 0``) the direction of an
    edge is fixed by its slope, and the path from ``a`` up to the lowest
    common ancestor and down to ``b`` is monotone exactly when all upward
    slopes are below all downward slopes or all above them.  The witness
    ``(-c, 1)`` or ``(c, -1)`` with ``c`` halfway between the two extreme
    slopes is certified against the extreme edge vectors, which suffices
    because the sign of its dot product with ``(dx, dy)``, ``dx > 0``, is
    linear in the slope.  Otherwise each pair is checked directly.
    """
    n = t.n
    pos = d.pos
    vec: list[Optional[Point]] = [None] * n
    for v in range(n):
        p = t.parent[v]
        if p is not None:
            vec[v] = (pos[v][0] - pos[p][0], pos[v][1] - pos[p][1])
    bad: list[tuple[int, int]] = []
    wit: dict[tuple[int, int], DirectionWitness] = {}
    if any(v is not None and v[0] <= 0 for v in vec):
        for a in range(n):
            for b in range(a + 1, n):
                w = check_tree_path_monotone(d, t, a, b)
                if w is None:
                    bad.append((a, b))
                elif witnesses:
                    wit[(a, b)] = w
        return bad, wit, n * (n - 1) // 2
    nonroot = [v for v in range(n) if vec[v] is not None]
    slope = {v: Fraction(vec[v][1], vec[v][0]) for v in nonroot}
    nonroot.sort(key=slope.__getitem__)
    # equal slopes share a rank so that strict comparisons stay exact
    rank = [0] * n
    for i, v in enumerate(nonroot):
        rank[v] = rank[nonroot[i - 1]] + (slope[v] != slope[nonroot[i - 1]]) if i else 0
    kids = t.children_order
    par = t.parent

    def witness(uhi, ulo, dhi, dlo) -> Optional[DirectionWitness]:
        if uhi is None:
            return DirectionWitness(1, 0)
        if dhi is None:
            return DirectionWitness(-1, 0)
        if rank[uhi] < rank[dlo]:
            lo_v, hi_v, sign = vec[uhi], vec[dlo], 1
        else:
            lo_v, hi_v, sign = vec[dhi], vec[ulo], -1
        # c = (s_lo + s_hi) / 2 with s = dy / dx
        num = lo_v[1] * hi_v[0] + hi_v[1] * lo_v[0]
        den = 2 * lo_v[0] * hi_v[0]
        w = DirectionWitness(-sign * num, sign * den)
        ups = [(-vec[u][0], -vec[u][1]) for u in (uhi, ulo)]
        downs = [vec[u] for u in (dhi, dlo)]
        return w if w.certifies(ups + downs) else None

    for a in range(n):
        u, prev = a, None
        uhi = ulo = None
        while True:
            if u > a:
                if uhi is not None and witnesses:
                    wit[(a, u)] = DirectionWitness(-1, 0)
            stack = [(c, c, c) for c in kids[u] if c != prev]
            while stack:
                b, dhi, dlo = stack.pop()
                if b > a:
                    if uhi is None or rank[uhi] < rank[dlo] or rank[dhi] < rank[ulo]:
                        if witnesses:
                            w = witness(uhi, ulo, dhi, dlo)
                            if w is None:
                                bad.append((a, b))
                            else:
                                wit[(a, b)] = w
                    else:
                        bad.append((a, b))
                for c in kids[b]:
                    stack.append((c, c if rank[c] > rank[dhi] else dhi, c if rank[c] < rank[dlo] else dlo))
            if par[u] is None:
                break
            if uhi is None:
                uhi = ulo = u
            else:
                if rank[u] > rank[uhi]:
                    uhi = u
                if rank[u] < rank[ulo]:
                    ulo = u
            prev, u = u, par[u]
    bad.sort()
    return bad, wit, n * (n - 1) // 2


def oracle_all_paths_monotone(d: GridDrawing, g: PlaneGraph, a: int, b: int) -> bool:
    """Brute force: is some simple path from ``a`` to ``b`` monotone?

    A prefix that is already not monotone cannot be extended to a monotone
    path, so such branches are cut.
    """
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"the path oracle is limited to n <= {ORACLE_MAX_N}")
    if a == b:
        return True
    pos = d.pos
    path = [a]
    on = {a}

    def go(u: int) -> bool:
        for w in g.rotation[u]:
            if w in on:
                continue
            path.append(w)
            if is_path_monotone([pos[v] for v in path]) is not None:
                if w == b:
                    return True
                on.add(w)
                found = go(w)
                on.discard(w)
                if found:
                    return True
            path.pop()
        return False

    return go(a)


# crossings -----------------------------------------------------------------


_SAFE = 1 << 29


def _arrays(values):
    big = max((abs(int(c)) for p in values for c in p), default=0) >= _SAFE
    return np.array(values, dtype=object if big else np.int64).reshape(-1, 2)


def _orient(ax, ay, bx, by, cx, cy):
    return np.sign((bx - ax) * (cy - ay) - (by - ay) * (cx - ax)).astype(np.int64)


def check_no_crossings(d: GridDrawing, g: PlaneGraph, block: int = 256) -> list[Crossing]:
    """Every improper meeting of two drawn edges and every vertex inside a non-incident edge."""
    edges = g.edges()
    out: list[Crossing] = []
    if not edges:
        return out
    P = _arrays([d.pos[u] for u, _ in edges])
    Q = _arrays([d.pos[v] for _, v in edges])
    U = np.array([u for u, _ in edges])
    V = np.array([v for _, v in edges])
    m = len(edges)
    for s in range(0, m, block):
        i = np.arange(s, min(s + block, m))[:, None]
        j = np.arange(m)[None, :]
        keep = j > i
        p1x, p1y, p2x, p2y = P[i, 0], P[i, 1], Q[i, 0], Q[i, 1]
        p3x, p3y, p4x, p4y = P[j, 0], P[j, 1], Q[j, 0], Q[j, 1]
        d1 = _orient(p3x, p3y, p4x, p4y, p1x, p1y)
        d2 = _orient(p3x, p3y, p4x, p4y, p2x, p2y)
        d3 = _orient(p1x, p1y, p2x, p2y, p3x, p3y)
        d4 = _orient(p1x, p1y, p2x, p2y, p4x, p4y)
        ui, vi, uj, vj = U[i], V[i], U[j], V[j]
        shared = (ui == uj) | (ui == vj) | (vi == uj) | (vi == vj)
        collinear = (d1 == 0) & (d2 == 0)
        # collinear pieces overlap when their projections on both axes overlap
        ov = (np.maximum(np.minimum(p1x, p2x), np.minimum(p3x, p4x))
              <= np.minimum(np.maximum(p1x, p2x), np.maximum(p3x, p4x)))
        ov &= (np.maximum(np.minimum(p1y, p2y), np.minimum(p3y, p4y))
               <= np.minimum(np.maximum(p1y, p2y), np.maximum(p3y, p4y)))
        meet = np.where(collinear, ov, (d1 * d2 <= 0) & (d3 * d4 <= 0))
        # a shared endpoint is fine unless the two edges run along each other
        o_p1 = (ui == uj) | (ui == vj)
        o_p3 = (uj == ui) | (uj == vi)
        ox = np.where(o_p1, p1x, p2x)
        oy = np.where(o_p1, p1y, p2y)
        ax = np.where(o_p1, p2x, p1x) - ox
        ay = np.where(o_p1, p2y, p1y) - oy
        bx = np.where(o_p3, p4x, p3x) - ox
        by = np.where(o_p3, p4y, p3y) - oy
        along = (ax * by - ay * bx == 0) & (ax * bx + ay * by > 0)
        bad = keep & np.where(shared, along, meet)
        for a_, b_ in zip(*np.nonzero(bad)):
            e1, e2 = edges[s + a_], edges[b_]
            kind = "overlap" if shared[a_, b_] or collinear[a_, b_] else "cross"
            out.append(Crossing(e1, e2, kind))
    # vertices in the interior of non-incident edges
    X = _arrays(list(d.pos))
    n = len(d.pos)
    for s in range(0, n, block):
        vi = np.arange(s, min(s + block, n))[:, None]
        vx, vy = X[vi, 0], X[vi, 1]
        ax, ay, bx, by = P[None, :, 0], P[None, :, 1], Q[None, :, 0], Q[None, :, 1]
        on_line = (bx - ax) * (vy - ay) - (by - ay) * (vx - ax) == 0
        inner = ((vx - ax) * (bx - ax) + (vy - ay) * (by - ay) > 0) & (
            (vx - bx) * (ax - bx) + (vy - by) * (ay - by) > 0)
        notinc = (vi != U[None, :]) & (vi != V[None, :])
        hit = on_line & inner & notinc
        for a_, b_ in zip(*np.nonzero(hit)):
            out.append(Crossing((s + int(a_),), edges[b_], "vertex"))
    return out


# all together ---------------------------------------------------------------


def grid_bounds(n: int, m: int) -> tuple[int, int]:
    """Width and height limits ``(n-1)+z`` and ``(n-1)((n-1)+z)`` with ``z = m-n+1``."""
    z = m - n + 1
    w = (n - 1) + z
    return w, (n - 1) * w


def check_bounds(d: GridDrawing, g: PlaneGraph) -> list[tuple[str, int, int]]:
    out = []
    if not d.pos:
        return out
    wmax, hmax = grid_bounds(g.n, g.m)
    xs = [p[0] for p in d.pos]
    ys = [p[1] for p in d.pos]
    if max(xs) - min(xs) > wmax:
        out.append(("width", max(xs) - min(xs), wmax))
    if min(xs) < 0:
        out.append(("x_min", min(xs), 0))
    if min(ys) < 0:
        out.append(("y_min", min(ys), 0))
    if max(ys) > hmax:
        out.append(("y_max", max(ys), hmax))
    return out


def coincident_vertices(d: GridDrawing) -> list[tuple[int, int]]:
    seen: dict[Point, int] = {}
    out = []
    for v, p in enumerate(d.pos):
        if p in seen:
            out.append((seen[p], v))
        else:
            seen[p] = v
    return out


def check_all_pairs(
    d: GridDrawing,
    g: PlaneGraph,
    t: GoodSpanningTree,
    witnesses: bool = False,
    bounds: bool = True,
) -> VerificationReport:
    rep = VerificationReport()
    for v, p in enumerate(d.pos):
        if not all(isinstance(c, (int, np.integer)) for c in p):
            rep.bound_violations.append(("off_grid", v, 0))
    rep.coincident = coincident_vertices(d)
    rep.crossing_pairs = check_no_crossings(d, g)
    bad, wit, count = all_pairs_tree_monotone(d, t, witnesses)
    rep.non_monotone_pairs = bad
    rep.witness_directions = wit
    rep.pairs_checked = count
    if bounds:
        rep.bound_violations.extend(check_bounds(d, g))
    return rep
