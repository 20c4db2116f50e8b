from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fixtures import PATH3, TRIANGLE
from monogrid.full_layout import draw_graph
from monogrid.generators import generate
from monogrid.good_tree import GoodSpanningTree, build_good_spanning_tree
from monogrid.plane_graph import PlaneGraph
from monogrid.tree_layout import GridDrawing, preorder
from monogrid.verify import (
    ORACLE_MAX_N,
    DirectionWitness,
    all_pairs_tree_monotone,
    check_all_pairs,
    check_no_crossings,
    check_tree_path_monotone,
    coincident_vertices,
    grid_bounds,
    half_plane_witness,
    is_path_monotone,
    oracle_all_paths_monotone,
    tree_path_between,
)

vectors = st.lists(
    st.tuples(st.integers(-6, 6), st.integers(-6, 6)).filter(lambda v: v != (0, 0)),
    min_size=1,
    max_size=6,
)


def _segments(*pairs) -> tuple[GridDrawing, PlaneGraph]:
    """Drawing of disjoint segments given as ((x1, y1), (x2, y2)) pairs."""
    pos, rot = [], []
    for a, b in pairs:
        i = len(pos)
        pos += [a, b]
        rot += [(i + 1,), (i,)]
    return GridDrawing(tuple(pos)), PlaneGraph(tuple(rot), None)


class TestWitness:
    def test_single_step(self):
        w = is_path_monotone([(0, 0), (1, 1)])
        assert w is not None and w.certifies([(1, 1)])

    def test_back_and_forth(self):
        assert is_path_monotone([(0, 0), (1, 0), (0, 0)]) is None
        assert half_plane_witness([(1, 2), (-1, -2)]) is None

    def test_two_directions(self):
        w = half_plane_witness([(1, 2), (1, 1)])
        assert w is not None and w.certifies([(1, 2), (1, 1)])

    def test_three_spread_vectors(self):
        assert half_plane_witness([(1, 0), (-1, 1), (-1, -1)]) is None

    def test_zero_vector_and_empty(self):
        assert half_plane_witness([(0, 0)]) is None
        assert half_plane_witness([]) is None
        assert not DirectionWitness(0, 0).certifies([(1, 0)])

    @settings(max_examples=300)
    @given(vectors)
    def test_witness_agrees_with_brute_force(self, vs):
        w = half_plane_witness(vs)
        # a strict half plane exists iff some small integer direction certifies it
        brute = any(
            DirectionWitness(a, b).certifies(vs)
            for a in range(-13, 14)
            for b in range(-13, 14)
        )
        assert (w is not None) == brute
        if w is not None:
            assert w.certifies(vs)

    @settings(max_examples=200)
    @given(vectors, st.integers(1, 9))
    def test_reversal_and_scaling(self, vs, k):
        pts = [(0, 0)]
        for x, y in vs:
            pts.append((pts[-1][0] + x, pts[-1][1] + y))
        fwd = is_path_monotone(pts) is not None
        assert (is_path_monotone(pts[::-1]) is not None) == fwd
        assert (is_path_monotone([(k * x, k * y) for x, y in pts]) is not None) == fwd


class TestTreePaths:
    def test_path_pair(self):
        gp, t = build_good_spanning_tree(PATH3, 0)
        assert tree_path_between(t, 2, 0) == [2, 1, 0]
        d = GridDrawing(((0, 0), (1, 2), (2, 3)))
        assert check_tree_path_monotone(d, t, 2, 0) is not None

    def test_hand_built_non_monotone_pair(self):
        # root r with two children drawn on the same ray: the path a-r-b folds back
        g = PlaneGraph(((1, 2), (0,), (0,)), (0, 1))
        t = GoodSpanningTree.from_parent(g, 0, [None, 0, 0], 1)
        d = GridDrawing(((0, 0), (1, 1), (2, 2)))
        bad, _, _ = all_pairs_tree_monotone(d, t)
        assert bad == [(1, 2)]
        assert not check_all_pairs(d, g, t, bounds=False).passed

    def test_fast_path_matches_direct_checks(self):
        rng = random.Random(7)
        for it in range(150):
            _, t = build_good_spanning_tree(generate("random_planar", rng.randint(3, 12), it))
            pos: list = [None] * t.n
            for v in preorder(t):
                p = t.parent[v]
                if p is None:
                    pos[v] = (0, 0)
                else:
                    dx = rng.randint(1, 2)
                    pos[v] = (pos[p][0] + dx, pos[p][1] + dx * rng.randint(-1, 1))
            d = GridDrawing(tuple(pos))
            ref = [
                (a, b)
                for a in range(t.n)
                for b in range(a + 1, t.n)
                if check_tree_path_monotone(d, t, a, b) is None
            ]
            for witnesses in (False, True):
                bad, wit, count = all_pairs_tree_monotone(d, t, witnesses)
                assert bad == ref
                assert count == t.n * (t.n - 1) // 2
                for (a, b), w in wit.items():
                    path = tree_path_between(t, a, b)
                    steps = [
                        (d.pos[q][0] - d.pos[p][0], d.pos[q][1] - d.pos[p][1])
                        for p, q in zip(path, path[1:])
                    ]
                    assert w.certifies(steps)

    def test_leftward_edges_use_direct_checks(self):
        g = PlaneGraph(((1, 2), (0,), (0,)), (0, 1))
        t = GoodSpanningTree.from_parent(g, 0, [None, 0, 0], 1)
        d = GridDrawing(((0, 0), (-1, 1), (1, 1)))
        bad, wit, _ = all_pairs_tree_monotone(d, t, witnesses=True)
        assert bad == [] and wit[(1, 2)].certifies([(1, -1), (1, 1)])


class TestCrossings:
    def test_proper_crossing(self):
        d, g = _segments(((0, 0), (2, 2)), ((0, 2), (2, 0)))
        (c,) = check_no_crossings(d, g)
        assert c.kind == "cross"

    def test_disjoint_and_parallel(self):
        d, g = _segments(((0, 0), (1, 0)), ((0, 1), (1, 1)))
        assert check_no_crossings(d, g) == []

    def test_shared_endpoint_is_fine(self):
        g = PlaneGraph(((1, 2), (0,), (0,)), (0, 1))
        d = GridDrawing(((0, 0), (1, 0), (0, 1)))
        assert check_no_crossings(d, g) == []

    def test_shared_endpoint_overlap(self):
        g = PlaneGraph(((1, 2), (0,), (0,)), (0, 1))
        d = GridDrawing(((0, 0), (2, 0), (1, 0)))
        kinds = {c.kind for c in check_no_crossings(d, g)}
        assert "overlap" in kinds

    def test_collinear_overlap(self):
        d, g = _segments(((0, 0), (2, 0)), ((1, 0), (3, 0)))
        kinds = [c.kind for c in check_no_crossings(d, g)]
        # each segment also has an endpoint inside the other
        assert kinds.count("overlap") == 1 and kinds.count("vertex") == 2

    def test_touching_t_junction(self):
        d, g = _segments(((0, 0), (2, 0)), ((1, 0), (1, 2)))
        assert check_no_crossings(d, g)

    def test_vertex_inside_edge(self):
        g = PlaneGraph(((1,), (0,), ()), None)
        d = GridDrawing(((0, 0), (2, 2), (1, 1)))
        assert [c.kind for c in check_no_crossings(d, g)] == ["vertex"]

    def test_triangle_drawing(self):
        gp, t = build_good_spanning_tree(TRIANGLE, 0)
        assert check_no_crossings(draw_graph(gp, t), gp) == []

    def test_large_coordinates(self):
        big = 1 << 40
        d, g = _segments(((0, 0), (big, big)), ((0, big), (big, 0)))
        assert len(check_no_crossings(d, g)) == 1


class TestReport:
    def test_coincident(self):
        d = GridDrawing(((0, 0), (1, 1), (0, 0)))
        assert coincident_vertices(d) == [(0, 2)]
        gp, t = build_good_spanning_tree(TRIANGLE, 0)
        rep = check_all_pairs(d, gp, t, bounds=False)
        assert rep.coincident and not rep.passed

    def test_bounds_formula(self):
        assert grid_bounds(3, 3) == (3, 6)
        assert grid_bounds(5, 4) == (4, 16)

    def test_summary_and_witnesses(self):
        gp, t = build_good_spanning_tree(generate("wheel", 12, 0))
        rep = check_all_pairs(draw_graph(gp, t), gp, t, witnesses=True)
        assert rep.passed and bool(rep)
        assert rep.pairs_checked == 66 == len(rep.witness_directions)
        s = rep.summary()
        assert s["passed"] and s["crossings"] == 0


class TestOracle:
    def test_guard(self):
        g = generate("cycle", ORACLE_MAX_N + 1, 0)
        gp, t = build_good_spanning_tree(g)
        with pytest.raises(ValueError):
            oracle_all_paths_monotone(draw_graph(gp, t), gp, 0, 1)

    def test_finds_other_path(self):
        # the tree path 1-0-2 folds back but the edge 1-2 is monotone
        g = PlaneGraph(((1, 2), (2, 0), (0, 1)), (0, 1))
        d = GridDrawing(((0, 0), (1, 1), (2, 2)))
        assert oracle_all_paths_monotone(d, g, 1, 2)
        assert oracle_all_paths_monotone(d, g, 0, 0)

    def test_no_monotone_path(self):
        g = PlaneGraph(((1, 2), (0,), (0,)), (0, 1))
        d = GridDrawing(((0, 0), (1, 1), (2, 2)))
        assert not oracle_all_paths_monotone(d, g, 1, 2)

    @settings(max_examples=30, deadline=None)
    @given(st.sampled_from(["random_planar", "maximal_planar", "wheel"]), st.integers(4, 9), st.integers(0, 999))
    def test_tree_monotone_implies_oracle(self, kind, n, seed):
        gp, t = build_good_spanning_tree(generate(kind, n, seed))
        d = draw_graph(gp, t)
        for a in range(n):
            for b in range(a + 1, n):
                assert check_tree_path_monotone(d, t, a, b) is not None
                assert oracle_all_paths_monotone(d, gp, a, b)
