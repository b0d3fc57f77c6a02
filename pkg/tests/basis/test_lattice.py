"""Tests for the subgraph and induced-subgraph hom-bases."""

from fractions import Fraction

import numpy as np
import pytest

from degencount.basis.exact import (
    count_indsubs_exact,
    count_subs_exact,
    evaluate_basis,
)
from degencount.basis.hombasis import HomBasis, parse_basis_dump
from degencount.basis.lattice import (
    emb_basis,
    indsub_basis,
    moebius_from_bottom,
    sub_basis,
    supergraph_multiplicities,
)
from degencount.core.canonical import canonical_form
from degencount.core.generators import (
    all_graphs,
    all_graphs_up_to,
    clique,
    cycle,
    independent_set,
    matching,
    path,
    random_graph,
)
from degencount.core.graph import set_partitions
from degencount.core.transforms import has_self_loop, quotient
from degencount.counting.brute import count_indsubs_brute, count_subs_brute
from degencount.dtd.treewidth import supergraph_classes


def label(graph):
    return canonical_form(graph)


class TestMoebius:
    def test_values(self):
        assert moebius_from_bottom([1, 1, 1]) == 1
        assert moebius_from_bottom([2, 1]) == -1
        assert moebius_from_bottom([3]) == 2
        assert moebius_from_bottom([2, 2]) == 1


class TestSubBasis:
    def test_triangle(self):
        """Every proper quotient of K3 has a self-loop."""
        basis = sub_basis(clique(3))
        assert dict(basis.terms) == {label(clique(3)): Fraction(1, 6)}

    def test_path(self):
        basis = sub_basis(path(3))
        assert dict(basis.terms) == {
            label(path(3)): Fraction(1, 2),
            label(clique(2)): Fraction(-1, 2),
        }

    def test_edge(self):
        assert dict(sub_basis(clique(2)).terms) == {label(clique(2)): Fraction(1, 2)}

    def test_emb_basis_is_unnormalised(self):
        assert dict(emb_basis(path(3)).terms) == {
            label(path(3)): Fraction(1),
            label(clique(2)): Fraction(-1),
        }

    def test_quotients_never_cancel(self):
        """Every self-loop-free quotient keeps a nonzero coefficient."""
        for h in all_graphs_up_to(4):
            basis = sub_basis(h)
            for partition in set_partitions(h.n):
                if not has_self_loop(h, partition):
                    assert basis.coefficient(label(quotient(h, partition))) != 0

    def test_identity_against_brute(self):
        for h in all_graphs_up_to(3):
            basis = sub_basis(h)
            for g in all_graphs_up_to(5):
                assert evaluate_basis(basis, g) == count_subs_brute(h, g)


class TestIndsubBasis:
    def test_clique_equals_sub_basis(self):
        assert dict(indsub_basis(clique(4)).terms) == dict(sub_basis(clique(4)).terms)

    def test_two_vertex_independent_set(self):
        """Non-edges: half of ordered pairs minus loops minus edges."""
        basis = indsub_basis(independent_set(2))
        assert dict(basis.terms) == {
            label(independent_set(2)): Fraction(1, 2),
            label(independent_set(1)): Fraction(-1, 2),
            label(clique(2)): Fraction(-1, 2),
        }
        assert evaluate_basis(basis, clique(3)) == 0
        assert evaluate_basis(basis, cycle(5)) == 5

    def test_supergraph_multiplicities(self):
        """Adding the missing edge to P3 gives K3 in exactly one way."""
        found = sorted((g.edge_count, m) for _, g, m in supergraph_multiplicities(path(3)))
        assert found == [(2, 1), (3, 1)]
        counts = {g.edge_count: m for _, g, m in supergraph_multiplicities(independent_set(3))}
        assert counts == {0: 1, 1: 3, 2: 3, 3: 1}

    def test_supergraphs_never_cancel(self):
        for h in all_graphs_up_to(4):
            basis = indsub_basis(h)
            for key in supergraph_classes(h):
                assert basis.coefficient(key) != 0

    def test_identity_against_brute(self):
        for h in all_graphs_up_to(3):
            basis = indsub_basis(h)
            for g in all_graphs_up_to(5):
                assert evaluate_basis(basis, g) == count_indsubs_brute(h, g)


class TestExactCounts:
    def test_subgraph_examples(self):
        assert count_subs_exact(clique(3), clique(4)) == 4
        assert count_subs_exact(matching(2), cycle(4)) == 2
        assert count_subs_exact(path(3), clique(3)) == 3

    def test_induced_examples(self):
        assert count_indsubs_exact(cycle(4), clique(4)) == 0
        assert count_indsubs_exact(path(3), cycle(4)) == 4

    def test_induced_edges(self):
        g = random_graph(9, 0.4, np.random.default_rng(1))
        assert count_indsubs_exact(clique(2), g) == g.edge_count

    def test_induced_at_most_subgraphs(self):
        rng = np.random.default_rng(4)
        for _ in range(5):
            g = random_graph(8, 0.5, rng)
            for h in all_graphs(3):
                assert count_indsubs_exact(h, g) <= count_subs_exact(h, g)


class TestBasisDump:
    def test_dump_and_parse(self):
        basis = indsub_basis(path(3))
        restored = parse_basis_dump(basis.dump())
        assert dict(restored.terms) == dict(basis.terms)

    def test_dump_lines(self):
        lines = sub_basis(path(3)).dump().splitlines()
        assert len(lines) == 2
        assert lines[0].split("\t")[0] == "-1/2"

    def test_collect_drops_zeros(self):
        k2 = clique(2)
        basis = HomBasis.collect([(label(k2), k2, Fraction(1)), (label(k2), k2, Fraction(-1))])
        assert len(basis) == 0


@pytest.mark.slow
class TestExhaustiveIdentity:
    def test_sub_identity(self):
        for h in all_graphs_up_to(4):
            basis = sub_basis(h)
            for g in all_graphs_up_to(6):
                assert evaluate_basis(basis, g) == count_subs_brute(h, g)

    def test_indsub_identity(self):
        for h in all_graphs_up_to(4):
            basis = indsub_basis(h)
            for g in all_graphs_up_to(6):
                assert evaluate_basis(basis, g) == count_indsubs_brute(h, g)

    def test_quotients_never_cancel_on_five_vertices(self):
        for h in all_graphs(5):
            basis = sub_basis(h)
            for partition in set_partitions(h.n):
                if not has_self_loop(h, partition):
                    assert basis.coefficient(label(quotient(h, partition))) != 0
