"""Hand-encoded plane graphs shared by the test modules."""

from __future__ import annotations

import math
from typing import Mapping, Sequence

from monogrid.plane_graph import PlaneGraph


def from_layout(
    names: str,
    pos: Mapping[str, tuple[float, float]],
    edges: str,
    outer: tuple[str, str],
) -> PlaneGraph:
    """Rotation system read off a straight-line layout (neighbours sorted by angle)."""
    idx = {c: i for i, c in enumerate(names)}
    adj: dict[str, list[str]] = {c: [] for c in names}
    for e in edges.split():
        u, v = e
        adj[u].append(v)
        adj[v].append(u)
    rot = []
    for c in names:
        x0, y0 = pos[c]
        nb = sorted(adj[c], key=lambda w: math.atan2(pos[w][1] - y0, pos[w][0] - x0))
        rot.append(tuple(idx[w] for w in nb))
    return PlaneGraph(tuple(rot), (idx[outer[0]], idx[outer[1]]), tuple(names))


def names_of(g: PlaneGraph, pairs: Sequence[tuple[int, int]]) -> set[str]:
    return {"".join(sorted(g.label(u) + g.label(v))) for u, v in pairs}


# a, b, c counterclockwise; the outer face is traced a -> c -> b
TRIANGLE = from_layout("abc", {"a": (0, 0), "b": (1, 0), "c": (0, 1)}, "ab bc ca", ("a", "c"))

# outer triangle a, b, c around the inner vertex d
K4 = from_layout(
    "abcd",
    {"a": (0, 0), "b": (4, 0), "c": (2, 4), "d": (2, 1)},
    "ab bc ca ad bd cd",
    ("a", "c"),
)

PATH3 = PlaneGraph(((1,), (0, 2), (1,)), (0, 1), ("r", "a", "b"))

STAR = from_layout(
    "cxyz", {"c": (0, 0), "x": (1, 0), "y": (0, 1), "z": (-1, -1)}, "cx cy cz", ("c", "x")
)

# two triangles sharing v (vertex 0)
BOWTIE = from_layout(
    "vabcd",
    {"v": (0, 0), "a": (2, 1), "b": (2, -1), "c": (-2, 1), "d": (-2, -1)},
    "va ab bv vc cd dv",
    ("v", "a"),
)

C4 = from_layout(
    "abcd", {"a": (0, 0), "b": (1, 0), "c": (1, 1), "d": (0, 1)}, "ab bc cd da", ("a", "d")
)

# hub h with rim 0..3 counterclockwise
W5 = from_layout(
    "hpqrs",
    {"h": (0, 0), "p": (1, 0), "q": (0, 1), "r": (-1, 0), "s": (0, -1)},
    "hp hq hr hs pq qr rs sp",
    ("p", "s"),
)

# K5 with every rotation in increasing vertex order: not an embedding
K5_TEXT = "n 5\nouter 0 1\n" + "".join(
    f"{v}: " + " ".join(str((v + k) % 5) for k in range(1, 5)) + "\n" for v in range(5)
)

# Reconstruction of the BFS walkthrough graph: root a with children b, c, d;
# e below, hanging {h, i, j} between d and e, {m, n} at d and {o, p} at k.
WALK_NAMES = "abcdefghijklmnop"
WALK_POS = {
    "a": (0, 10), "b": (-10, 0), "c": (0, 5), "d": (10, 0), "e": (0, -8),
    "f": (-6, 2), "l": (3, 2), "g": (0, -1), "k": (0, -4),
    "o": (-1, -5), "p": (-0.5, -6.5),
    "h": (5, -3), "i": (3, -4), "j": (6, -1), "m": (6, 3), "n": (5, 4.5),
}
WALK_EDGES = "ab ac ad be ed cf cl ef ld fg lg gk ek ko kp op dj jh hd hi ie he dm mn nd"
WALK = from_layout(WALK_NAMES, WALK_POS, WALK_EDGES, ("a", "d"))

# tree of the final embedding, traced by hand from the walkthrough rules
WALK_TREE = {
    "ab", "ac", "ad", "be", "cf", "cl", "dh", "dj", "dm", "dn",
    "ei", "fg", "gk", "ko", "kp",
}
WALK_NON_TREE = {"de", "dl", "ef", "eh", "ek", "gl", "hi", "hj", "mn", "op"}
