"""Tests for the decomposition-based homomorphism counter."""

import time

import numpy as np
import pytest

from degencount.config import EngineConfig
from degencount.core.generators import (
    all_graphs,
    all_graphs_up_to,
    clique,
    cycle,
    grid,
    matching,
    path,
    random_degenerate,
    random_graph,
)
from degencount.core.graph import Graph
from degencount.core.transforms import tensor_product
from degencount.counting.brute import count_homs_brute
from degencount.counting.homs import (
    HostOrientation,
    count_homs_dtd,
    count_homs_dtd_stats,
    count_homs_oriented,
)
from degencount.counting.tables import HashedTable, OrderedTable, make_table
from degencount.dtd.kernel import kernel_dtd
from degencount.dtd.oriented import orient_by_order, orientations


class TestTables:
    def test_ordered_lookup_and_merge(self):
        """Duplicate keys are summed and missing keys read as zero."""
        table = OrderedTable([((2, 1), 3), ((0, 5), 1), ((2, 1), 4)])
        assert table.get((2, 1)) == 7
        assert table.get((0, 5)) == 1
        assert table.get((1, 1)) == 0
        assert len(table) == 2

    def test_hashed_matches_ordered(self):
        entries = [((i % 3, i % 5), i) for i in range(30)]
        ordered = OrderedTable(entries)
        hashed = HashedTable(entries)
        for a in range(3):
            for b in range(5):
                assert ordered.get((a, b)) == hashed.get((a, b))

    def test_make_table_kind(self):
        assert isinstance(make_table("hashed", []), HashedTable)
        assert isinstance(make_table("ordered", []), OrderedTable)


class TestHostOrientation:
    def test_out_degree_is_degeneracy(self):
        """A degeneracy orientation has out-degree at most d."""
        host = HostOrientation.from_graph(grid(4))
        assert host.d == 2
        assert sum(len(o) for o in host.out) == grid(4).edge_count

    def test_every_edge_oriented_once(self):
        g = clique(5)
        host = HostOrientation.from_graph(g)
        for u, v in g.edges:
            assert (v in host.out_sets[u]) != (u in host.out_sets[v])


class TestCountHomsDtd:
    def test_known_values(self):
        """Small counts with closed forms."""
        assert count_homs_dtd(clique(2), clique(3)) == 6
        assert count_homs_dtd(path(3), clique(3)) == 12
        assert count_homs_dtd(clique(3), clique(4)) == 24
        assert count_homs_dtd(cycle(4), clique(2)) == 2

    def test_odd_cycle_into_bipartite(self):
        assert count_homs_dtd(clique(3), grid(3)) == 0

    def test_empty_host(self):
        """No images exist in the empty host."""
        assert count_homs_dtd(path(2), Graph.empty(0)) == 0
        assert count_homs_dtd(Graph.empty(1), Graph.empty(0)) == 0

    def test_empty_pattern(self):
        assert count_homs_dtd(Graph.empty(0), clique(3)) == 1

    def test_disconnected_pattern_multiplies(self):
        """Two disjoint edges into K3: 6 * 6."""
        assert count_homs_dtd(matching(2), clique(3)) == 36

    def test_matches_brute_small_corpus(self):
        """Every pattern up to 3 vertices into every host up to 5 vertices."""
        for h in all_graphs_up_to(3):
            for g in all_graphs_up_to(5):
                assert count_homs_dtd(h, g) == count_homs_brute(h, g)

    def test_matches_brute_random_pairs(self):
        rng = np.random.default_rng(11)
        for _ in range(25):
            h = random_graph(int(rng.integers(1, 6)), 0.5, rng)
            g = random_graph(int(rng.integers(1, 9)), 0.4, rng)
            assert count_homs_dtd(h, g) == count_homs_brute(h, g)

    def test_hashed_dictionary_agrees(self):
        config = EngineConfig(dictionary="hashed")
        g = random_degenerate(12, 3, np.random.default_rng(2))
        assert count_homs_dtd(cycle(4), g, config) == count_homs_dtd(cycle(4), g)

    def test_optimal_strategy_agrees(self):
        config = EngineConfig(dtd_strategy="optimal")
        g = random_degenerate(10, 2, np.random.default_rng(5))
        assert count_homs_dtd(cycle(5), g, config) == count_homs_brute(cycle(5), g)

    def test_threads_deterministic(self):
        """Splitting the root loop across threads gives the same total."""
        g = random_degenerate(30, 3, np.random.default_rng(7))
        serial = count_homs_dtd(path(4), g)
        threaded = count_homs_dtd(path(4), g, EngineConfig(threads=4))
        assert serial == threaded

    def test_tensor_multiplicativity(self):
        rng = np.random.default_rng(3)
        for _ in range(5):
            h = random_graph(3, 0.7, rng)
            g1 = random_graph(3, 0.7, rng)
            g2 = random_graph(3, 0.7, rng)
            product = tensor_product(g1, g2)
            assert count_homs_dtd(h, product) == count_homs_dtd(h, g1) * count_homs_dtd(h, g2)

    def test_allowed_restricts_images(self):
        assert count_homs_dtd(clique(2), clique(3), allowed=[{0}, {1, 2}]) == 2

    def test_stats(self):
        """K3 has six acyclic orientations, all with a width-one kernel."""
        count, stats = count_homs_dtd_stats(clique(3), clique(4))
        assert count == 24
        assert stats.orientations == 6
        assert stats.max_width == 1
        assert stats.elapsed_ms >= 0.0


class TestOrientationSum:
    def test_orientations_sum_to_hom_count(self):
        """Orientation-respecting counts over all orientations add up to Hom."""
        for h in all_graphs(3):
            if not h.is_connected():
                continue
            for g in all_graphs(4):
                host = HostOrientation.from_graph(g)
                total = sum(
                    count_homs_oriented(dag, host, kernel_dtd(dag)) for dag in orientations(h)
                )
                assert total == count_homs_brute(h, g)

    def test_single_orientation(self):
        """The transitive triangle maps only onto transitive triangles."""
        dag = orient_by_order(clique(3), [0, 1, 2])
        host = HostOrientation.from_graph(clique(4))
        assert count_homs_oriented(dag, host, kernel_dtd(dag)) == 4


@pytest.mark.slow
class TestExhaustiveOracle:
    def test_patterns_up_to_four_hosts_up_to_six(self):
        for h in all_graphs_up_to(4):
            for g in all_graphs_up_to(6):
                assert count_homs_dtd(h, g) == count_homs_brute(h, g)

    def test_random_pairs(self):
        rng = np.random.default_rng(2024)
        for _ in range(500):
            h = random_graph(int(rng.integers(1, 7)), 0.5, rng)
            g = random_graph(int(rng.integers(1, 13)), 0.3, rng)
            assert count_homs_dtd(h, g) == count_homs_brute(h, g)

    def test_clique_counts_scale_linearly(self):
        """Doubling the host roughly doubles the time for K4."""
        rng = np.random.default_rng(9)
        timings = []
        for n in (2000, 4000):
            host = random_degenerate(n, 3, rng)
            started = time.perf_counter()
            count_homs_dtd(clique(4), host)
            timings.append(time.perf_counter() - started)
        assert timings[1] < 4 * timings[0]
