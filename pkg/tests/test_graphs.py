from __future__ import annotations

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from graphfold import (
    Graph,
    are_isomorphic,
    closed_neighborhood,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    induced_subgraph,
    is_connected,
    path_graph,
    permute,
)

from conftest import graphs, graphs_with_permutation


class TestConstruction:
    def test_edges_are_symmetric_and_deduplicated(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edges() == [(0, 1)]
        assert g.has_edge(1, 0) and g.has_edge(0, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            Graph(2, [(1, 1)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            Graph(2, [(0, 2)])

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            Graph(-1)

    def test_empty_graph_is_legal(self):
        g = Graph(0)
        assert g.n == 0 and g.edges() == []

    def test_equality_is_structural(self):
        assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
        assert Graph(3, [(0, 1)]) != Graph(3, [(0, 2)])
        assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(0, 1)]))

    def test_immutable(self):
        g = Graph(2)
        with pytest.raises(AttributeError):
            g.n = 5


class TestClosedNeighborhood:
    def test_single_vertex(self):
        assert closed_neighborhood(Graph(1), 0) == {0}

    def test_path_center(self):
        assert closed_neighborhood(path_graph(3), 1) == {0, 1, 2}

    def test_five_cycle_every_vertex_has_three(self):
        # brute-force from the cycle adjacency itself
        g = cycle_graph(5)
        for v in range(5):
            expected = {v} | {u for u in range(5) if g.has_edge(u, v)}
            assert closed_neighborhood(g, v) == expected
            assert len(expected) == 3

    def test_out_of_range_is_contract_violation(self):
        with pytest.raises(ValueError):
            closed_neighborhood(Graph(2), 2)

    @given(graphs(min_n=1))
    def test_contains_self_and_counts_degree(self, g):
        for v in range(g.n):
            nbhd = closed_neighborhood(g, v)
            assert v in nbhd
            assert len(nbhd) == g.degree(v) + 1


class TestConnectivity:
    def test_cycle_connected(self):
        assert is_connected(cycle_graph(5))

    def test_two_isolated_vertices(self):
        assert not is_connected(Graph(2))

    def test_empty_graph_connected_by_convention(self):
        assert is_connected(Graph(0))

    def test_components_ordered_by_smallest_member(self):
        g = Graph(5, [(1, 3), (2, 4)])
        assert connected_components(g) == [[0], [1, 3], [2, 4]]

    def test_induced_subgraph_relabels_densely(self):
        g = Graph(5, [(1, 3), (3, 4)])
        sub, relabel = induced_subgraph(g, [1, 3, 4])
        assert relabel == {1: 0, 3: 1, 4: 2}
        assert sub == Graph(3, [(0, 1), (1, 2)])

    def test_disjoint_union_shifts_labels(self):
        g = disjoint_union([path_graph(2), path_graph(3)])
        assert g.edges() == [(0, 1), (2, 3), (3, 4)]


class TestIsomorphism:
    def test_relabeled_cycle(self):
        g = cycle_graph(5)
        assert are_isomorphic(g, permute(g, [2, 0, 4, 1, 3]))

    def test_cycle_vs_path(self):
        assert not are_isomorphic(cycle_graph(5), path_graph(5))

    def test_six_cycle_vs_hub_pentagon(self):
        # same order, different edge counts: trivially non-isomorphic
        hub = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (5, 3)])
        assert not are_isomorphic(cycle_graph(6), hub)

    def test_regular_pair_with_equal_profiles(self):
        # C6 and two triangles: both 2-regular, only one connected
        two_triangles = disjoint_union([cycle_graph(3), cycle_graph(3)])
        assert not are_isomorphic(cycle_graph(6), two_triangles)

    @given(graphs_with_permutation())
    def test_reflexive_and_symmetric_under_relabeling(self, gp):
        g, perm = gp
        h = permute(g, perm)
        assert are_isomorphic(g, g)
        assert are_isomorphic(g, h)
        assert are_isomorphic(h, g)

    @settings(max_examples=30)
    @given(graphs_with_permutation(max_n=7), st.data())
    def test_transitive_spot_check(self, gp, data):
        g, perm = gp
        h = permute(g, perm)
        perm2 = data.draw(st.permutations(list(range(g.n))))
        k = permute(h, list(perm2))
        assert are_isomorphic(g, h) and are_isomorphic(h, k)
        assert are_isomorphic(g, k)

    def test_permute_validates(self):
        with pytest.raises(ValueError):
            permute(Graph(3), [0, 0, 1])


def test_factories():
    assert path_graph(1).edge_count == 0
    assert cycle_graph(3) == complete_graph(3)
    assert complete_graph(4).edge_count == 6
    with pytest.raises(ValueError):
        cycle_graph(2)
