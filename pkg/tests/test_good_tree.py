from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import WALK, WALK_NAMES, WALK_NON_TREE, WALK_TREE, K4, PATH3, STAR, TRIANGLE, names_of
from monogrid.generators import generate
from monogrid.good_tree import (
    EdgeClass,
    GoodSpanningTree,
    GoodTreeError,
    _BfsConstruction,
    _finish,
    bfs_violations,
    build_good_spanning_tree,
    ccw_postorder,
    is_bfs_tree,
    left_right_groups,
    reference_neighbour,
    tree_path,
    verify_good_tree,
)
from monogrid.plane_graph import PlaneGraph, edge, outer_vertices

graphs = st.builds(
    generate,
    st.sampled_from(["tree", "cycle", "wheel", "maximal_planar", "random_planar", "cactus"]),
    st.integers(4, 60),
    st.integers(0, 10_000),
)


def _ancestors(t: GoodSpanningTree, v: int) -> set[int]:
    out = set()
    while t.parent[v] is not None:
        v = t.parent[v]
        out.add(v)
    return out


class TestBuild:
    def test_triangle(self):
        gp, t = build_good_spanning_tree(TRIANGLE, 0)
        assert sorted(t.tree_edges()) == [(0, 1), (0, 2)]
        assert t.non_tree_edges() == [(1, 2)]
        assert t.reference_edge == (0, 1)
        assert gp.rotation == TRIANGLE.rotation
        assert verify_good_tree(gp, t)

    def test_tree_input_is_its_own_tree(self):
        g = generate("tree", 25, 3)
        gp, t = build_good_spanning_tree(g)
        assert gp.rotation == g.rotation
        assert not t.non_tree_edges()
        assert {edge(*e) for e in t.tree_edges()} == {edge(*e) for e in g.edges()}

    def test_single_vertex(self):
        gp, t = build_good_spanning_tree(PlaneGraph(((),)))
        assert t.n == 1 and t.root == 0 and not t.tree_edges()

    def test_inner_root_rejected(self):
        with pytest.raises(GoodTreeError):
            build_good_spanning_tree(K4, 3)

    def test_invalid_graph_rejected(self):
        with pytest.raises(ValueError):
            build_good_spanning_tree(PlaneGraph(((1,), (0,), (3,), (2,)), (0, 1)))

    def test_root_defaults_to_outer_walk_start(self):
        _, t = build_good_spanning_tree(K4)
        assert t.root == K4.outer[0]

    def test_reference_edge_is_ccw_outer_neighbour(self):
        g = generate("wheel", 9, 0)
        gp, t = build_good_spanning_tree(g)
        r, s = t.reference_edge
        assert s == reference_neighbour(gp, r)
        assert s in outer_vertices(gp)

    def test_prefer_bfs_only_changes_the_pick(self):
        g = generate("maximal_planar", 10, 1)
        gp, t = build_good_spanning_tree(g, prefer_bfs=True)
        assert verify_good_tree(gp, t)
        gp0, t0 = build_good_spanning_tree(g)
        if is_bfs_tree(gp0, t0):
            assert t.parent == t0.parent


class TestWalkthrough:
    """The BFS walkthrough graph rebuilt from its description."""

    def run(self):
        b = _BfsConstruction(WALK, 0)
        out = b.run()
        assert out is not None
        return b, _finish(out[0], 0, out[1], out[2], "bfs")

    def test_classification(self):
        _, (gp, t) = self.run()
        assert names_of(gp, t.tree_edges()) == WALK_TREE
        assert names_of(gp, t.non_tree_edges()) == WALK_NON_TREE
        assert {"de", "ef", "ek", "dl"} <= WALK_NON_TREE

    def test_forced_edges(self):
        b, _ = self.run()
        forced = {"".join(sorted(WALK_NAMES[x] for x in e)) for e in b.forced}
        assert {"ef", "ek", "dl"} <= forced

    def test_relocated_components(self):
        b, _ = self.run()
        moved = {"".join(sorted(WALK_NAMES[v] for v in c)) for c in b.relocated}
        assert {"dehij", "dmn", "kop"} <= moved

    def test_public_builder_agrees(self):
        gp, t = build_good_spanning_tree(WALK)
        assert names_of(gp, t.non_tree_edges()) == WALK_NON_TREE


class TestVerify:
    def test_cond1_violation(self):
        # path a-b-c with the non-tree edge (a, c) back to the root
        t = GoodSpanningTree.from_parent(TRIANGLE, 0, [None, 0, 1], 1)
        rep = verify_good_tree(TRIANGLE, t)
        assert not rep.ok
        assert (2, "cond1") in {(v.vertex, v.condition) for v in rep.violations}

    def test_cond2b_violation(self):
        # root 1 with children 2 and 3; vertex 3 has child 0 and the
        # non-tree edge (3, 2), which falls out of X-Y-Z order around 3
        g = PlaneGraph(((3, 2), (3, 2), (3, 0, 1), (1, 0, 2)), (1, 3))
        t = GoodSpanningTree.from_parent(g, 1, [3, None, 1, 1], reference_neighbour(g, 1))
        rep = verify_good_tree(g, t)
        assert {v.condition for v in rep.violations} == {"cond2b"}

    def test_spanning_violation(self):
        t = GoodSpanningTree(0, (None, 0, None), ((1,), (), ()), {}, (0, 1), ())
        rep = verify_good_tree(TRIANGLE, t)
        assert "spanning" in rep.conditions()

    def test_report_lists_condition_names(self):
        _, t = build_good_spanning_tree(K4)
        assert verify_good_tree(K4, t).conditions() == set()


class TestOrders:
    def test_path_postorder(self):
        _, t = build_good_spanning_tree(PATH3, 0)
        assert ccw_postorder(t) == [2, 1, 0]

    def test_star_postorder_starts_at_reference_child(self):
        _, t = build_good_spanning_tree(STAR, 0)
        s = t.reference_edge[1]
        c2 = STAR.ccw_next(0, s)
        c3 = STAR.ccw_next(0, c2)
        assert ccw_postorder(t) == [s, c2, c3, 0]

    def test_tree_path_and_groups(self):
        g = generate("tree", 30, 1)
        _, t = build_good_spanning_tree(g)
        v = max(range(t.n), key=lambda u: t.levels()[u])
        path = tree_path(t, v)
        assert path[0] == t.root and path[-1] == v
        groups = left_right_groups(t, v)
        for step in groups.steps:
            kids = set(t.children_order[step.u])
            assert set(step.left) | set(step.right) | {step.next} == kids


class TestBfs:
    def test_bfs_holds_on_easy_kinds(self):
        for kind in ("tree", "cycle", "wheel", "cactus"):
            gp, t = build_good_spanning_tree(generate(kind, 40, 2))
            assert is_bfs_tree(gp, t), kind

    def test_violations_are_level_jumps(self):
        gp, t = build_good_spanning_tree(generate("maximal_planar", 40, 0))
        lev = t.levels()
        for u, v in bfs_violations(gp, t):
            assert abs(lev[u] - lev[v]) > 1


@settings(max_examples=80, deadline=None)
@given(graphs)
def test_build_output_is_good(g):
    gp, t = build_good_spanning_tree(g)
    assert verify_good_tree(gp, t).ok
    assert {edge(*e) for e in gp.edges()} == {edge(*e) for e in g.edges()}
    for e, c in t.edge_class.items():
        assert (c is EdgeClass.TREE) == (e in {edge(*x) for x in t.tree_edges()})


@settings(max_examples=50, deadline=None)
@given(graphs)
def test_non_tree_endpoints_incomparable(g):
    _, t = build_good_spanning_tree(g)
    for u, v in t.non_tree_edges():
        assert u not in _ancestors(t, v) and v not in _ancestors(t, u)


@settings(max_examples=20, deadline=None)
@given(graphs)
def test_deterministic(g):
    a = build_good_spanning_tree(g)
    b = build_good_spanning_tree(g)
    assert a[0] == b[0] and a[1].parent == b[1].parent
