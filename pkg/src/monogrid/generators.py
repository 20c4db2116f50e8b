"""Seeded generators of plane graphs for tests, benchmarks and the ``gen`` command."""

from __future__ import annotations

import random

from .plane_graph import PlaneGraph, PlaneGraphError

KINDS = ("tree", "path", "cycle", "wheel", "maximal_planar", "random_planar", "cactus")
MIN_N = {"cycle": 3, "wheel": 4, "maximal_planar": 3}


def _insert_in_face(rotation: list[list[int]], walk: list[tuple[int, int]], v: int) -> None:
    # the face lies to the left of its walk, so v sees the face vertices in walk order
    for p, q in walk:
        nbrs = rotation[q]
        nbrs.insert(nbrs.index(p), v)
    rotation[v] = [p for p, _ in walk]


def _face_walk(rotation: list[list[int]], dart: tuple[int, int]) -> list[tuple[int, int]]:
    walk = [dart]
    u, v = dart
    while True:
        r = rotation[v]
        w = r[(r.index(u) - 1) % len(r)]
        u, v = v, w
        if (u, v) == dart:
            return walk
        walk.append((u, v))


def maximal_planar(n: int, rng: random.Random) -> PlaneGraph:
    """Random triangulation by repeatedly splitting a uniformly chosen face."""
    if n < 3:
        raise PlaneGraphError("maximal_planar needs n >= 3")
    rotation: list[list[int]] = [[1, 2], [2, 0], [0, 1]] + [[] for _ in range(n - 3)]
    faces = [[(0, 1), (1, 2), (2, 0)], [(1, 0), (0, 2), (2, 1)]]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        walk = faces[i]
        _insert_in_face(rotation, walk, v)
        a, b, c = (p for p, _ in walk)
        faces[i] = [(a, b), (b, v), (v, a)]
        faces.append([(b, c), (c, v), (v, b)])
        faces.append([(c, a), (a, v), (v, c)])
    return PlaneGraph.from_rotation(rotation, outer=(1, 0))


def random_planar(n: int, rng: random.Random, keep: float | None = None) -> PlaneGraph:
    """A triangulation with random edges deleted while staying connected."""
    if n <= 3:
        return cycle(n) if n == 3 else path(n)
    g = maximal_planar(n, rng)
    rotation = [list(r) for r in g.rotation]
    if keep is None:
        keep = rng.uniform(0.35, 0.95)
    edges = g.edges()
    rng.shuffle(edges)
    target = max(n - 1, round(keep * len(edges)))
    m = len(edges)
    for u, v in edges:
        if m <= target:
            break
        rotation[u].remove(v)
        rotation[v].remove(u)
        if _connected(rotation):
            m -= 1
        else:
            rotation[u].append(v)
            rotation[v].append(u)
            # put the edge back where it was
            rotation[u] = [w for w in g.rotation[u] if w in set(rotation[u])]
            rotation[v] = [w for w in g.rotation[v] if w in set(rotation[v])]
    outer = g.outer
    if outer[1] not in rotation[outer[0]]:
        outer = (outer[0], rotation[outer[0]][0])
    return PlaneGraph.from_rotation(rotation, outer=outer)


def _connected(rotation: list[list[int]]) -> bool:
    seen = {0}
    todo = [0]
    while todo:
        u = todo.pop()
        for w in rotation[u]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == len(rotation)


def tree(n: int, rng: random.Random) -> PlaneGraph:
    rotation: list[list[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        p = rng.randrange(v)
        rotation[p].insert(rng.randrange(len(rotation[p]) + 1), v)
        rotation[v].append(p)
    for r in rotation:
        k = rng.randrange(len(r)) if r else 0
        r[:] = r[k:] + r[:k]
    return PlaneGraph.from_rotation(rotation)


def path(n: int) -> PlaneGraph:
    rotation = [[w for w in (v - 1, v + 1) if 0 <= w < n] for v in range(n)]
    return PlaneGraph.from_rotation(rotation)


def cycle(n: int) -> PlaneGraph:
    if n < 3:
        raise PlaneGraphError("cycle needs n >= 3")
    # drawn counterclockwise: inside v sees v+1 then v-1 counterclockwise
    rotation = [[(v + 1) % n, (v - 1) % n] for v in range(n)]
    return PlaneGraph.from_rotation(rotation, outer=(1, 0))


def wheel(n: int) -> PlaneGraph:
    """Hub ``0`` with rim ``1..n-1`` drawn counterclockwise."""
    if n < 4:
        raise PlaneGraphError("wheel needs n >= 4")
    k = n - 1
    rim = list(range(1, n))
    rotation: list[list[int]] = [rim]
    for i in range(k):
        v = rim[i]
        rotation.append([rim[(i + 1) % k], 0, rim[(i - 1) % k]])
    return PlaneGraph.from_rotation(rotation, outer=(2, 1))


def cactus(n: int, rng: random.Random) -> PlaneGraph:
    """Cycles and pendant edges glued at cut vertices, in random faces."""
    rotation: list[list[int]] = [[]]
    while len(rotation) < n:
        base = rng.randrange(len(rotation))
        size = min(n - len(rotation), rng.choice((1, 1, 2, 3, 4)))
        new = list(range(len(rotation), len(rotation) + size))
        rotation.extend([] for _ in new)
        chain = [base] + new
        for a, b in zip(chain, chain[1:]):
            rotation[b].append(a)
        for a, b in zip(chain, chain[1:]):
            rotation[a].append(b)
        slot = rng.randrange(len(rotation[base]))
        if size >= 2 and rng.random() < 0.7:
            last = new[-1]
            # close the cycle: base sees new[0] then last counterclockwise
            rotation[base].remove(new[0])
            rotation[base][slot:slot] = [new[0], last]
            rotation[last].append(base)
        else:
            rotation[base].remove(new[0])
            rotation[base].insert(slot, new[0])
    return PlaneGraph.from_rotation(rotation)


def generate(kind: str, n: int, seed: int = 0) -> PlaneGraph:
    """Deterministic graph of the given kind, size and seed."""
    rng = random.Random(f"{kind}:{n}:{seed}")
    if n < 1:
        raise PlaneGraphError("n must be positive")
    if kind == "tree":
        return tree(n, rng)
    if kind == "path":
        return path(n)
    if kind == "cycle":
        return cycle(n)
    if kind == "wheel":
        return wheel(n)
    if kind == "maximal_planar":
        return maximal_planar(n, rng)
    if kind == "random_planar":
        return random_planar(n, rng)
    if kind == "cactus":
        return cactus(n, rng)
    raise PlaneGraphError(f"unsupported graph kind {kind!r}")
