"""Tests for canonical forms and automorphism counts."""

import networkx as nx
import numpy as np
import pytest

from degencount.config import EngineConfig
from degencount.core.canonical import (
    are_isomorphic,
    automorphism_count,
    canonical_form,
    canonical_graph,
    graph_from_label,
)
from degencount.core.errors import BoundExceededError
from degencount.core.generators import (
    all_graphs,
    biclique,
    clique,
    cycle,
    grid,
    independent_set,
    path,
    random_degenerate,
    random_graph,
    to_networkx,
    wreath,
)
from degencount.core.graph import Graph


def shuffled(graph: Graph, rng: np.random.Generator) -> Graph:
    return graph.relabel([int(v) for v in rng.permutation(graph.n)])


class TestCanonicalForm:
    def test_invariant_under_relabelling(self, rng):
        for graph in [grid(3), wreath(4, [2, 1, 2, 1]), random_degenerate(10, 3, rng)]:
            assert canonical_form(shuffled(graph, rng)) == canonical_form(graph)

    @pytest.mark.slow
    def test_thousand_random_relabellings(self, rng):
        for _ in range(1000):
            n = int(rng.integers(1, 11))
            if rng.random() < 0.5:
                graph = random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
            else:
                graph = random_degenerate(n, int(rng.integers(1, 4)), rng)
            assert canonical_form(shuffled(graph, rng)) == canonical_form(graph)

    def test_distinguishes_classes(self):
        labels = {canonical_form(g) for g in all_graphs(5)}
        assert len(labels) == 34

    def test_isomorphism(self):
        assert are_isomorphic(cycle(4), biclique(2, 2))
        assert not are_isomorphic(path(4), biclique(1, 3))
        assert not are_isomorphic(path(3), clique(3))

    def test_agrees_with_networkx(self, rng):
        graphs = [random_degenerate(7, 2, rng) for _ in range(30)]
        for a in graphs[:10]:
            for b in graphs:
                expected = nx.is_isomorphic(to_networkx(a), to_networkx(b))
                assert are_isomorphic(a, b) == expected

    def test_coloured(self):
        """Colourings must be preserved, not just the graph."""
        centred_at_zero = path(3).relabel([1, 0, 2])
        assert canonical_form(path(3), (0, 1, 0)) == canonical_form(centred_at_zero, (1, 0, 0))
        assert canonical_form(path(3), (0, 1, 0)) != canonical_form(path(3), (1, 0, 0))

    def test_label_decodes(self):
        assert are_isomorphic(graph_from_label(canonical_form(grid(2))), cycle(4))
        assert canonical_graph(path(4)) == canonical_graph(path(4).relabel([3, 1, 0, 2]))

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            canonical_form(path(5), config=EngineConfig(small_graph_bound=4))


class TestAutomorphismCount:
    @pytest.mark.parametrize(
        "graph, expected",
        [
            (clique(4), 24),
            (cycle(5), 10),
            (path(4), 2),
            (grid(3), 8),
            (biclique(2, 3), 12),
            (independent_set(3), 6),
            (Graph.empty(0), 1),
        ],
    )
    def test_known_groups(self, graph, expected):
        assert automorphism_count(graph) == expected

    def test_coloured(self):
        assert automorphism_count(path(3), (0, 1, 0)) == 2
        assert automorphism_count(path(3), (0, 1, 2)) == 1

    def test_matches_networkx(self):
        for graph in all_graphs(5):
            g = to_networkx(graph)
            expected = sum(1 for _ in nx.isomorphism.GraphMatcher(g, g).isomorphisms_iter())
            assert automorphism_count(graph) == expected
