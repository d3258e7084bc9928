"""Solver behaviour on frozen examples plus oracle equivalence properties."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gnconn import (
    Graph,
    GraphError,
    NotExistReason,
    g_range,
    is_gnc_cut,
    is_gnc_faulty_set,
    kappa_classical,
    kappa_extra,
    kappa_gnc,
    kappa_gnc_oracle,
    lambda_classical,
    lambda_extra,
)
from gnconn.families import (
    complete,
    complete_bipartite,
    cycle,
    path,
    star,
    tn_star,
    wheel,
)


def connected_random_graphs(max_n=6):
    @st.composite
    def build(draw):
        from gnconn import is_connected

        n = draw(st.integers(min_value=2, max_value=max_n))
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mask = draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1))
        edges = [p for c, p in enumerate(pairs) if mask >> c & 1]
        G = Graph(n, edges)
        if not is_connected(G):
            # densify: connect consecutive vertices to guarantee connectivity
            extra = [(i, i + 1) for i in range(n - 1) if not G.has_edge(i, i + 1)]
            G = Graph(n, edges + extra)
        return G
    return build()


class TestPredicates:
    def test_cycle_pair_is_faulty_set(self):
        assert is_gnc_faulty_set(cycle(6), {0, 3}, 1)

    def test_isolating_fails(self):
        assert not is_gnc_faulty_set(path(3), {1}, 1)

    def test_empty_set_trivial_at_zero(self):
        assert is_gnc_faulty_set(wheel(7), set(), 0)

    def test_cycle_pair_is_cut(self):
        assert is_gnc_cut(cycle(6), {0, 3}, 1)

    def test_single_removal_keeps_cycle_connected(self):
        assert not is_gnc_cut(cycle(6), {0}, 1)

    def test_remaining_clique_not_cut(self):
        assert not is_gnc_cut(complete(4), {0, 1}, 0)

    def test_rejects_foreign_vertices(self):
        with pytest.raises(GraphError):
            is_gnc_cut(path(3), {9}, 0)
        with pytest.raises(GraphError):
            is_gnc_faulty_set(path(3), {0}, -1)


class TestGRange:
    def test_path_five(self):
        assert g_range(path(5)) == (0, 1)

    def test_k2_has_no_admissible_g(self):
        assert g_range(complete(2))[1] < 0

    def test_wheel_seven(self):
        assert g_range(wheel(7)) == (0, 2)


class TestKappaGnc:
    def test_bipartite_small_side(self):
        res = kappa_gnc(complete_bipartite(3, 2), 0)
        assert res.value == 2
        assert res.certificate == (3, 4)

    def test_wheel_center_and_antipodes(self):
        res = kappa_gnc(wheel(7), 1)
        assert res.value == 3
        assert res.certificate == (0, 1, 4)

    def test_balanced_bipartite_not_exists_at_one(self):
        res = kappa_gnc(complete_bipartite(3, 3), 1)
        assert not res.exists

    def test_path_middle_vertex(self):
        res = kappa_gnc(path(5), 1)
        assert res.value == 1
        assert res.certificate == (2,)

    def test_short_paths_have_no_value_at_one(self):
        # The degree/order window rules out g=1 below 5 vertices.
        assert kappa_gnc(path(3), 1).reason is NotExistReason.G_OUT_OF_RANGE
        assert kappa_gnc(path(4), 1).reason is NotExistReason.G_OUT_OF_RANGE
        assert kappa_gnc(path(5), 1).exists

    def test_complete_graph_reason(self):
        assert kappa_gnc(complete(5), 0).reason is NotExistReason.COMPLETE_GRAPH

    def test_disconnected_reason(self):
        G = Graph(4, [(0, 1), (2, 3)])
        assert kappa_gnc(G, 0).reason is NotExistReason.DISCONNECTED_INPUT

    def test_negative_g_rejected(self):
        with pytest.raises(GraphError):
            kappa_gnc(path(5), -1)

    def test_certificate_always_validates(self):
        for G, g in ((wheel(9), 1), (cycle(6), 1), (tn_star(12, 5, (2, 3)), 1)):
            res = kappa_gnc(G, g)
            assert res.exists
            assert is_gnc_cut(G, res.certificate, g)
            assert len(res.certificate) == res.value


class TestOracle:
    def test_cycle_agreement(self):
        fast, slow = kappa_gnc(cycle(6), 1), kappa_gnc_oracle(cycle(6), 1)
        assert fast.value == slow.value == 2

    def test_complete_agreement(self):
        assert kappa_gnc(complete(5), 0).exists == kappa_gnc_oracle(complete(5), 0).exists is False

    def test_structured_tree_value(self):
        T = tn_star(10, 4, (2, 2))
        assert kappa_gnc_oracle(T, 1).value == 6

    def test_size_guard(self):
        with pytest.raises(GraphError):
            kappa_gnc_oracle(complete(21), 0)

    @settings(max_examples=80, deadline=None)
    @given(connected_random_graphs(max_n=6), st.integers(min_value=0, max_value=3))
    def test_oracle_matches_fast_path(self, G, g):
        fast = kappa_gnc(G, g)
        slow = kappa_gnc_oracle(G, g)
        assert fast.value == slow.value
        if fast.exists:
            assert fast.certificate == slow.certificate
            assert is_gnc_cut(G, fast.certificate, g)


class TestKappaExtra:
    def test_equals_classical_at_zero(self):
        for G in (path(5), cycle(6), wheel(7), complete_bipartite(3, 2)):
            assert kappa_extra(G, 0).value == kappa_classical(G)

    def test_cycle_opposite_pair(self):
        res = kappa_extra(cycle(6), 1)
        assert res.value == 2
        assert res.certificate == (0, 3)

    def test_complete_not_exists(self):
        assert not kappa_extra(complete(4), 1).exists

    def test_brute_force_agreement_small(self):
        # Independent check: enumerate all subsets directly.
        from itertools import combinations

        from gnconn import components_after_removal

        for G in (cycle(6), wheel(6), path(6)):
            for g in (0, 1, 2):
                expected = None
                for k in range(G.n - 1):
                    found = None
                    for sub in combinations(range(G.n), k):
                        summary = components_after_removal(G, sub)
                        if summary.count >= 2 and all(
                            c.size >= g + 1 for c in summary.components
                        ):
                            found = k
                            break
                    if found is not None:
                        expected = found
                        break
                assert kappa_extra(G, g).value == expected


class TestLambdaExtra:
    def test_cycle(self):
        assert lambda_extra(cycle(6), 1).value == 2

    def test_matches_classical_at_zero(self):
        for G in (path(5), cycle(5), wheel(6)):
            assert lambda_extra(G, 0).value == lambda_classical(G)

    def test_star_isolates_leaves(self):
        assert not lambda_extra(star(5), 1).exists

    def test_edge_budget_guard(self):
        with pytest.raises(GraphError):
            lambda_extra(complete(8), 1)  # 28 edges > 24


class TestRelations:
    def test_extra_never_exceeds_gnc(self):
        for G in (cycle(6), wheel(8), tn_star(10, 4, (2, 2))):
            for g in range(0, 3):
                gnc = kappa_gnc(G, g)
                extra = kappa_extra(G, g)
                if gnc.exists and extra.exists:
                    assert extra.value <= gnc.value

    def test_g1_good_neighbor_equals_extra(self):
        # Minimum degree >= 1 in a component is the same as order >= 2.
        for G in (cycle(6), cycle(7), path(6), wheel(8)):
            assert kappa_gnc(G, 1).value == kappa_extra(G, 1).value

    def test_monotone_in_g(self):
        for G in (wheel(9), cycle(8)):
            v0, v1 = kappa_gnc(G, 0), kappa_gnc(G, 1)
            if v1.exists:
                assert v0.exists and v0.value <= v1.value
