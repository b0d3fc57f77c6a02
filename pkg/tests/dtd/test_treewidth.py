"""Tests for exhaustive dag treewidth and the tau parameters."""

import pytest

from degencount.config import EngineConfig
from degencount.core.errors import BoundExceededError
from degencount.core.generators import all_graphs, clique, cycle, matching, path
from degencount.core.graph import Graph
from degencount.dtd.decomposition import validate_dtd
from degencount.dtd.kernel import kernel_dtd
from degencount.dtd.oriented import orient_by_order, orientations
from degencount.dtd.treewidth import (
    best_dtd,
    dag_treewidth,
    quotient_classes,
    supergraph_classes,
    tau1,
    tau2,
    tau3,
)


class TestDagTreewidth:
    def test_clique(self, config):
        dag = orient_by_order(clique(4), [3, 1, 0, 2])
        width, dtd = dag_treewidth(dag, config)
        assert width == 1
        assert validate_dtd(dag, dtd).ok

    def test_beats_kernel_on_matching(self, config):
        """Two disjoint edges need both sources in the kernel but never in one bag."""
        dag = orient_by_order(matching(2), [0, 1, 2, 3])
        assert kernel_dtd(dag).width == 2
        width, dtd = dag_treewidth(dag, config)
        assert width == 1
        assert validate_dtd(dag, dtd).ok

    def test_never_above_kernel(self, config):
        for dag in orientations(cycle(5)):
            width, dtd = dag_treewidth(dag, config)
            assert width <= kernel_dtd(dag).width
            assert dtd.width == width
            assert validate_dtd(dag, dtd).ok

    def test_bound(self):
        dag = orient_by_order(path(5), range(5))
        with pytest.raises(BoundExceededError):
            dag_treewidth(dag, EngineConfig(dtw_vertex_bound=4))

    def test_best_dtd_strategy(self):
        dag = orient_by_order(matching(2), [0, 1, 2, 3])
        assert best_dtd(dag, EngineConfig()).width == 2
        assert best_dtd(dag, EngineConfig(dtd_strategy="optimal")).width == 1


class TestTaus:
    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_cliques(self, k):
        assert tau1(clique(k)) == 1

    def test_edgeless_graph(self):
        assert tau1(Graph.empty(3)) == 1

    @pytest.mark.parametrize("graph", [path(4), cycle(4), matching(2)])
    def test_monotone_chain(self, graph):
        t1, t2, t3 = tau1(graph), tau2(graph), tau3(graph)
        assert t1 <= t2 <= t3

    def test_quotient_classes_of_path(self):
        """P3 has loop-free quotients P3 and K2 (merging the two ends)."""
        classes = quotient_classes(path(3))
        assert sorted(g.n for g in classes.values()) == [2, 3]

    def test_supergraph_classes_of_path(self):
        classes = supergraph_classes(path(3))
        assert sorted(g.edge_count for g in classes.values()) == [2, 3]

    def test_bound(self):
        with pytest.raises(BoundExceededError):
            tau1(cycle(6), EngineConfig(dtw_vertex_bound=5))


@pytest.mark.slow
class TestExhaustive:
    def test_optimal_decompositions_up_to_five_vertices(self, config):
        for graph in all_graphs(5):
            for dag in orientations(graph):
                width, dtd = dag_treewidth(dag, config)
                assert width <= kernel_dtd(dag).width
                assert validate_dtd(dag, dtd).ok

    def test_tau_chain_on_four_vertices(self):
        for graph in all_graphs(4):
            assert tau1(graph) <= tau2(graph) <= tau3(graph)
