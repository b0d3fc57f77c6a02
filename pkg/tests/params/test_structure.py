"""Tests for the exact structural parameters."""

import pytest

from degencount.config import EngineConfig
from degencount.core.errors import BoundExceededError
from degencount.core.generators import (
    all_graphs_up_to,
    biclique,
    clique,
    cycle,
    independent_set,
    matching,
    path,
)
from degencount.core.graph import Graph
from degencount.core.transforms import subdivide
from degencount.params.structure import (
    independence_number,
    induced_matching_number,
    is_edge_transitive,
    vertex_cover_number,
)


class TestInducedMatchingNumber:
    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_clique(self, k: int):
        assert induced_matching_number(clique(k)) == 1

    @pytest.mark.parametrize("k", [1, 3, 6])
    def test_matching(self, k: int):
        assert induced_matching_number(matching(k)) == k

    def test_cycles(self):
        assert induced_matching_number(cycle(6)) == 2
        assert induced_matching_number(cycle(5)) == 1

    def test_paths(self):
        """The two end edges of P4 share a neighbourhood edge; those of P5 do not."""
        assert induced_matching_number(path(4)) == 1
        assert induced_matching_number(path(5)) == 2

    def test_biclique(self):
        assert induced_matching_number(biclique(3, 4)) == 1

    def test_edgeless(self):
        assert induced_matching_number(independent_set(4)) == 0

    def test_at_most_half_the_vertices(self):
        for g in all_graphs_up_to(6):
            assert 2 * induced_matching_number(g) <= g.n

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            induced_matching_number(path(6), EngineConfig(small_graph_bound=5))


class TestIndependenceNumber:
    def test_small_graphs(self):
        assert independence_number(clique(4)) == 1
        assert independence_number(independent_set(4)) == 4
        assert independence_number(cycle(5)) == 2
        assert independence_number(biclique(2, 5)) == 5

    def test_empty_graph(self):
        assert independence_number(Graph.empty(0)) == 0

    def test_gallai_identity(self):
        for g in all_graphs_up_to(6):
            assert vertex_cover_number(g) + independence_number(g) == g.n

    def test_bounds_induced_matching(self):
        """One endpoint per edge of an induced matching is independent."""
        for g in all_graphs_up_to(6):
            assert induced_matching_number(g) <= independence_number(g)


class TestEdgeTransitivity:
    def test_subdivided_biclique(self):
        assert is_edge_transitive(subdivide(biclique(2, 2)))

    def test_path(self):
        assert not is_edge_transitive(path(4))

    def test_single_edge(self):
        assert is_edge_transitive(clique(2))
        assert is_edge_transitive(Graph.from_edges(4, [(1, 2)]))

    def test_symmetric_graphs(self):
        assert is_edge_transitive(cycle(6))
        assert is_edge_transitive(clique(4))
        assert is_edge_transitive(biclique(2, 3))
