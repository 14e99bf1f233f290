import numpy as np
import pytest

from quantum_maxcut import (
    GraphError,
    ParseError,
    WeightedGraph,
    match_forest_decompose,
    parse_graph,
    proper_edge_coloring,
    spanning_tree,
    triangles_per_edge,
    two_color_forest,
)
from quantum_maxcut.generate import gnp_graph


def k4():
    return WeightedGraph.from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


def triangle():
    return parse_graph("0 1\n1 2\n2 0")


class TestParse:
    def test_single_edge(self):
        g = parse_graph("0 1 1.0")
        assert g.n == 2
        assert g.edges == ((0, 1, 1.0),)
        assert g.total_weight == 1.0

    def test_unweighted_default(self):
        g = triangle()
        assert g.n == 3
        assert all(w == 1.0 for _, _, w in g.edges)
        assert g.degree == (2, 2, 2)

    def test_negative_weight_rejected(self):
        with pytest.raises(ParseError, match="line 1"):
            parse_graph("0 1 -2")

    def test_self_loop_rejected(self):
        with pytest.raises(ParseError, match="self-loop"):
            parse_graph("3 3")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ParseError, match="duplicate"):
            parse_graph("0 1\n1 0 2.0")

    def test_comments_and_blanks(self):
        g = parse_graph("# header\n\n0 1 2.5  # trailing\n")
        assert g.edges == ((0, 1, 2.5),)

    def test_malformed_line_reports_number(self):
        with pytest.raises(ParseError, match="line 2"):
            parse_graph("0 1\n0 one")


class TestGraphInvariants:
    def test_degree_matches_incidence(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            g = gnp_graph(int(rng.integers(2, 15)), 0.5, rng)
            for v in range(g.n):
                assert g.degree[v] == sum(1 for u, w, _ in g.edges if v in (u, w))

    def test_noncanonical_order_rejected(self):
        with pytest.raises(GraphError):
            WeightedGraph(3, ((2, 1, 1.0),))


class TestTriangles:
    def test_k4_every_edge_in_two(self):
        assert set(triangles_per_edge(k4()).values()) == {2}

    def test_tree_triangle_free(self):
        g = parse_graph("0 1\n1 2\n1 3")
        assert set(triangles_per_edge(g).values()) == {0}

    def test_triangle(self):
        assert set(triangles_per_edge(triangle()).values()) == {1}


class TestSpanningTree:
    def test_path_is_its_own_tree(self):
        g = parse_graph("0 1\n1 2")
        assert sorted((u, v) for u, v, _ in spanning_tree(g)) == [(0, 1), (1, 2)]

    def test_triangle_tree_size(self):
        assert len(spanning_tree(triangle())) == 2

    def test_disconnected_errors(self):
        g = WeightedGraph.from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(GraphError, match="disconnected"):
            spanning_tree(g)

    def test_tree_coloring_cuts_all_tree_edges(self):
        rng = np.random.default_rng(1)
        for _ in range(30):
            g = gnp_graph(int(rng.integers(2, 12)), 0.7, rng)
            try:
                tree = spanning_tree(g)
            except GraphError:
                continue
            bits = two_color_forest(g, tree)
            assert all(bits[u] != bits[v] for u, v, _ in tree)


class TestTwoColorForest:
    def test_path(self):
        g = parse_graph("0 1\n1 2")
        bits = two_color_forest(g, [(0, 1), (1, 2)])
        assert bits in ((0, 1, 0), (1, 0, 1))

    def test_star_center_differs(self):
        g = parse_graph("0 1\n0 2\n0 3")
        bits = two_color_forest(g, g.edges)
        assert all(bits[0] != bits[v] for v in (1, 2, 3))

    def test_cycle_rejected(self):
        with pytest.raises(GraphError, match="cycle"):
            two_color_forest(triangle(), triangle().edges)

    def test_isolated_get_bit_zero(self):
        g = WeightedGraph.from_edges(4, [(0, 1), (2, 3)])
        bits = two_color_forest(g, [(0, 1)])
        assert bits[2] == 0 and bits[3] == 0


class TestEdgeColoring:
    def test_path_two_colors(self):
        col = proper_edge_coloring(parse_graph("0 1\n1 2"))
        assert col[(0, 1)] != col[(1, 2)]

    def test_triangle_three_colors(self):
        assert len(set(proper_edge_coloring(triangle()).values())) == 3

    def test_matching_one_color(self):
        g = WeightedGraph.from_edges(4, [(0, 1), (2, 3)])
        assert set(proper_edge_coloring(g).values()) == {0}

    def test_proper_and_bounded_on_random_graphs(self):
        rng = np.random.default_rng(2)
        for _ in range(200):
            g = gnp_graph(int(rng.integers(2, 18)), float(rng.uniform(0.1, 0.9)), rng)
            if not g.edges:
                continue
            col = proper_edge_coloring(g)
            assert len(col) == len(g.edges)
            assert max(col.values()) + 1 <= g.max_degree + 1
            used = set()
            for (u, v), c in col.items():
                assert (u, c) not in used and (v, c) not in used
                used.add((u, c))
                used.add((v, c))


class TestMatchForestDecompose:
    def test_weighted_path(self):
        g = parse_graph("0 1 1\n1 2 2")
        d = match_forest_decompose(g)
        assert d.matching == ((1, 2, 2.0),)
        assert d.forest == ((0, 1, 1.0), (1, 2, 2.0))
        assert d.matching_weight == 2.0 and d.forest_weight == 3.0
        # sum_v max = 1 + 2 + 2 = 5 = m + f
        assert d.matching_weight + d.forest_weight == 5.0
        assert d.unmatched == (0,)

    def test_single_edge(self):
        d = match_forest_decompose(parse_graph("0 1 3"))
        assert d.matching == d.forest == ((0, 1, 3.0),)
        assert d.matching_weight == d.forest_weight == 3.0

    def test_uniform_star_tie_break(self):
        g = parse_graph("0 1\n0 2\n0 3")
        d = match_forest_decompose(g)
        # center picks the highest-index leaf edge; that edge is doubly maximal
        assert d.matching == ((0, 3, 1.0),)
        assert len(d.forest) == 3
        mx = [max((w for u, v, w in g.edges if x in (u, v)), default=0.0)
              for x in range(g.n)]
        assert sum(mx) == d.matching_weight + d.forest_weight

    def test_isolated_vertices_contribute_nothing(self):
        g = WeightedGraph.from_edges(3, [(0, 1)])
        d = match_forest_decompose(g)
        assert 2 in d.unmatched

    def test_identity_on_random_graphs(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            g = gnp_graph(int(rng.integers(2, 20)), float(rng.uniform(0.1, 0.9)),
                          rng, weights="exp")
            if not g.edges:
                continue
            d = match_forest_decompose(g)
            mx = [0.0] * g.n
            for u, v, w in g.edges:
                mx[u] = max(mx[u], w)
                mx[v] = max(mx[v], w)
            assert abs(sum(mx) - (d.matching_weight + d.forest_weight)) < 1e-12
            covered = set()
            for u, v, _ in d.matching:
                assert u not in covered and v not in covered
                covered.update((u, v))
            two_color_forest(g, d.forest)  # raises if the forest had a cycle
            assert set(d.matching) <= set(d.forest)
