"""Core graph type, components, and classical connectivity."""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnconn import (
    Graph,
    GraphError,
    components_after_removal,
    is_connected,
    is_spanning_subgraph,
    kappa_classical,
    lambda_classical,
)
from gnconn.families import complete, cycle, path, star, wheel


def random_graph_strategy(max_n=8):
    @st.composite
    def build(draw):
        n = draw(st.integers(min_value=1, max_value=max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        return Graph(n, [p for c, p in enumerate(pairs) if mask >> c & 1])
    return build()


def brute_force_lambda(G):
    """Independent edge-connectivity oracle: smallest disconnecting edge set."""
    edges = G.edges()
    for k in range(len(edges) + 1):
        for combo in combinations(edges, k):
            removed = set(combo)
            adj = {v: set() for v in range(G.n)}
            for u, v in edges:
                if (u, v) not in removed:
                    adj[u].add(v)
                    adj[v].add(u)
            seen = set()
            stack = [0]
            while stack:
                x = stack.pop()
                if x in seen:
                    continue
                seen.add(x)
                stack.extend(adj[x] - seen)
            if len(seen) != G.n:
                return k
    return None


class TestGraphBasics:
    def test_rejects_out_of_range_n(self):
        with pytest.raises(GraphError):
            Graph(65)
        with pytest.raises(GraphError):
            Graph(-1)

    def test_rejects_loops_and_duplicates(self):
        with pytest.raises(GraphError):
            Graph(3, [(0, 0)])
        with pytest.raises(GraphError):
            Graph(3, [(0, 1), (1, 0)])
        with pytest.raises(GraphError):
            Graph(3, [(0, 5)])

    def test_adjacency_is_symmetric(self):
        G = Graph(4, [(0, 1), (1, 2), (2, 3)])
        for u in range(4):
            for v in range(4):
                assert G.has_edge(u, v) == G.has_edge(v, u)

    def test_edge_count_is_half_degree_sum(self):
        G = wheel(7)
        assert 2 * G.edge_count == sum(G.degrees())

    def test_edges_round_trip(self):
        edges = [(0, 2), (1, 3), (2, 3)]
        assert Graph(5, edges).edges() == sorted(edges)

    def test_degree_accessors(self):
        G = star(5)
        assert G.degree(0) == 4
        assert G.min_degree() == 1
        assert G.max_degree() == 4

    def test_relabel_preserves_structure(self):
        G = path(4)
        H = G.relabel([3, 2, 1, 0])
        assert H.edges() == [(0, 1), (1, 2), (2, 3)]


class TestComponents:
    def test_cycle_split_in_two(self):
        # Hand walk: C6 minus {0, 3} leaves 1-2 and 4-5, each a single edge.
        summary = components_after_removal(cycle(6), {0, 3})
        assert summary.count == 2
        assert [c.vertices for c in summary.components] == [(1, 2), (4, 5)]
        assert all(c.size == 2 and c.min_degree == 1 for c in summary.components)

    def test_remove_everything(self):
        summary = components_after_removal(wheel(5), range(5))
        assert summary.count == 0
        assert summary.components == ()

    def test_isolated_endpoints(self):
        summary = components_after_removal(path(3), {1})
        assert summary.count == 2
        assert all(c.size == 1 and c.min_degree == 0 for c in summary.components)

    def test_rejects_foreign_vertices(self):
        with pytest.raises(GraphError):
            components_after_removal(path(3), {7})

    @settings(max_examples=150, deadline=None)
    @given(random_graph_strategy(), st.data())
    def test_sizes_partition_the_remainder(self, G, data):
        removed = data.draw(st.sets(st.integers(min_value=0, max_value=G.n - 1)))
        summary = components_after_removal(G, removed)
        assert sum(c.size for c in summary.components) == G.n - len(removed)


class TestKappaClassical:
    def test_path_has_cut_vertex(self):
        assert kappa_classical(path(5)) == 1

    def test_wheel_seven(self):
        assert kappa_classical(wheel(7)) == 3

    def test_complete_has_no_cut(self):
        assert kappa_classical(complete(5)) is None

    def test_disconnected_flags_zero(self):
        assert kappa_classical(Graph(4, [(0, 1), (2, 3)])) == 0

    def test_connectivity_matches_component_count(self):
        for G in (path(4), cycle(5), Graph(3), Graph(1)):
            no_removal = components_after_removal(G, ())
            assert (no_removal.count <= 1) == is_connected(G)


class TestLambdaClassical:
    def test_tree_edge(self):
        assert lambda_classical(path(4)) == 1

    def test_cycle_needs_two(self):
        assert lambda_classical(cycle(6)) == brute_force_lambda(cycle(6)) == 2

    def test_complete_four(self):
        assert lambda_classical(complete(4)) == brute_force_lambda(complete(4)) == 3

    def test_rejects_tiny(self):
        with pytest.raises(GraphError):
            lambda_classical(Graph(1))

    @settings(max_examples=60, deadline=None)
    @given(random_graph_strategy(max_n=6))
    def test_matches_brute_force(self, G):
        if G.n < 2 or not is_connected(G):
            return
        assert lambda_classical(G) == brute_force_lambda(G)

    def test_whitney_chain_small(self):
        from gnconn.enumeration import connected_graph_classes

        for n in range(2, 7):
            for G in connected_graph_classes(n):
                if G.is_complete():
                    continue
                assert kappa_classical(G) <= lambda_classical(G) <= G.min_degree()


class TestSpanningSubgraph:
    def test_path_spans_cycle(self):
        assert is_spanning_subgraph(path(4), cycle(4))

    def test_reflexive(self):
        G = wheel(6)
        assert is_spanning_subgraph(G, G)

    def test_extra_edge_fails(self):
        assert not is_spanning_subgraph(complete(3), path(3))

    def test_different_order_fails(self):
        assert not is_spanning_subgraph(path(3), path(4))
