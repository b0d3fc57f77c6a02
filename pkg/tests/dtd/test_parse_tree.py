"""Tests for skeletons, clique-width parse trees and the decompositions they give."""

import numpy as np
import pytest

from degencount.core.errors import DecompositionError
from degencount.core.generators import all_graphs, clique, cycle, path, random_graph
from degencount.dtd.decomposition import validate_dtd
from degencount.dtd.oriented import orient_by_order, orientations
from degencount.dtd.parse_tree import (
    CliqueParseTree,
    ParseNode,
    ParseOp,
    dtd_from_clique_parse,
    dtd_from_orientation_parse,
    evaluate_parse_tree,
    parse_tree_from_order,
    skeleton_cliquewidth_bound,
    skeleton_parse_tree,
)
from degencount.dtd.skeleton import skeleton
from degencount.dtd.treewidth import dag_treewidth


@pytest.fixture
def crown():
    """C6 with every even vertex a source: three joints, each shared by two sources."""
    return orient_by_order(cycle(6), [0, 2, 4, 1, 3, 5])


class TestSkeleton:
    def test_vee(self):
        skel = skeleton(orient_by_order(path(3), [0, 2, 1]))
        assert skel.sources == (0, 2)
        assert skel.joints == (1,)
        assert skel.arcs == frozenset({(0, 1), (2, 1)})
        assert skel.undirected_edges() == frozenset({(0, 1), (1, 2)})

    def test_single_source_has_no_joints(self):
        skel = skeleton(orient_by_order(clique(4), [0, 1, 2, 3]))
        assert skel.vertex_set == frozenset({0})
        assert not skel.arcs

    def test_skips_non_joint_vertices(self):
        """Vertex 0 is reached from source 1 only, so the skeleton drops it."""
        skel = skeleton(orient_by_order(path(4), [1, 3, 0, 2]))
        assert skel.vertex_set == frozenset({1, 2, 3})
        assert skel.closure([1]) == frozenset({1, 2})


class TestParseTree:
    def test_triangle_from_order(self):
        tree = parse_tree_from_order(range(3), clique(3).edges, [0, 1, 2])
        graph = evaluate_parse_tree(tree).root_graph(tree)
        assert graph.vertices == frozenset({0, 1, 2})
        assert graph.edges == clique(3).edges
        assert tree.label_count == 2

    def test_path_from_order(self):
        tree = parse_tree_from_order(range(5), path(5).edges, range(5))
        graph, order = evaluate_parse_tree(tree).root_graph(tree).to_graph()
        assert order == [0, 1, 2, 3, 4]
        assert graph == path(5)
        assert tree.label_count <= 3

    def test_clique_records_created_edges(self):
        tree = parse_tree_from_order(range(2), clique(2).edges, [0, 1])
        evaluation = evaluate_parse_tree(tree)
        created = [edges for edges in evaluation.created_edges if edges]
        assert created == [frozenset({(0, 1)})]

    def test_order_must_cover(self):
        with pytest.raises(DecompositionError):
            parse_tree_from_order(range(3), [], [0, 1])

    def test_two_roots(self):
        nodes = (
            ParseNode(ParseOp.CREATE, (1, 0), -1),
            ParseNode(ParseOp.CREATE, (1, 1), -1),
        )
        with pytest.raises(DecompositionError, match="one root"):
            CliqueParseTree(nodes)

    def test_clique_needs_distinct_labels(self):
        nodes = (
            ParseNode(ParseOp.CLIQUE, (1, 1), -1),
            ParseNode(ParseOp.CREATE, (1, 0), 0),
        )
        with pytest.raises(DecompositionError, match="distinct"):
            CliqueParseTree(nodes)

    def test_union_arity(self):
        nodes = (
            ParseNode(ParseOp.UNION, (), -1),
            ParseNode(ParseOp.CREATE, (1, 0), 0),
        )
        with pytest.raises(DecompositionError, match="children"):
            CliqueParseTree(nodes)

    def test_vertex_created_twice(self):
        nodes = (
            ParseNode(ParseOp.UNION, (), -1),
            ParseNode(ParseOp.CREATE, (1, 0), 0),
            ParseNode(ParseOp.CREATE, (2, 0), 0),
        )
        with pytest.raises(DecompositionError, match="twice"):
            CliqueParseTree(nodes)


class TestDtdFromParse:
    def test_crown(self, crown):
        skel = skeleton(crown)
        tree = skeleton_parse_tree(skel)
        dtd = dtd_from_clique_parse(skel, tree)
        assert len(dtd) == len(tree.nodes)
        assert dtd.width <= tree.label_count
        assert validate_dtd(skel, dtd).ok
        assert validate_dtd(crown, dtd).ok

    def test_every_orientation_of_cycle(self):
        for dag in orientations(cycle(5)):
            dtd = dtd_from_orientation_parse(dag)
            assert validate_dtd(dag, dtd).ok

    def test_joints_first_order(self, crown):
        skel = skeleton(crown)
        tree = skeleton_parse_tree(skel, joints_first=True)
        assert validate_dtd(crown, dtd_from_clique_parse(skel, tree)).ok

    def test_wrong_graph(self, crown):
        skel = skeleton(crown)
        tree = parse_tree_from_order(range(6), [], range(6))
        with pytest.raises(DecompositionError, match="skeleton"):
            dtd_from_clique_parse(skel, tree)

    def test_cliquewidth_bound_of_clique(self):
        """Every orientation of a clique has one source and an empty skeleton."""
        assert skeleton_cliquewidth_bound(clique(4)) == 1


@pytest.mark.slow
def test_parse_decompositions_up_to_five_vertices():
    for graph in all_graphs(5):
        for dag in orientations(graph):
            skel = skeleton(dag)
            if not skel.vertex_set:
                continue
            tree = skeleton_parse_tree(skel)
            dtd = dtd_from_clique_parse(skel, tree)
            assert dtd.width <= tree.label_count
            assert validate_dtd(dag, dtd).ok


def random_skeleton_parses(count: int, max_vertices: int, seed: int):
    """Seeded (dag, skeleton, parse tree) triples from random linear k-expressions."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_vertices + 1))
        graph = random_graph(n, float(rng.uniform(0.2, 0.8)), rng)
        dag = orient_by_order(graph, [int(v) for v in rng.permutation(n)])
        skel = skeleton(dag)
        order = [int(v) for v in rng.permutation(sorted(skel.vertex_set))]
        yield dag, skel, parse_tree_from_order(skel.vertex_set, skel.undirected_edges(), order)


def check_parse_decomposition(dag, skel, tree):
    dtd = dtd_from_clique_parse(skel, tree)
    assert validate_dtd(dag, dtd).ok
    assert dtd.width <= tree.label_count
    assert dtd.width >= dag_treewidth(dag)[0]


def test_random_parse_trees_give_valid_decompositions():
    for dag, skel, tree in random_skeleton_parses(20, 6, seed=31):
        check_parse_decomposition(dag, skel, tree)


@pytest.mark.slow
def test_random_parse_trees_up_to_eight_vertices():
    for dag, skel, tree in random_skeleton_parses(200, 8, seed=32):
        check_parse_decomposition(dag, skel, tree)
