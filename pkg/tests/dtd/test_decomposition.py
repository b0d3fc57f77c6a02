"""Tests for dag tree decompositions and their validator."""

from itertools import combinations

import networkx as nx
import numpy as np
import pytest

from degencount.core.errors import DecompositionError
from degencount.core.generators import path, random_graph
from degencount.dtd.decomposition import DagTreeDecomposition, require_valid, validate_dtd
from degencount.dtd.oriented import orient_by_order


@pytest.fixture
def vee():
    """0 -> 1 <- 2."""
    return orient_by_order(path(3), [0, 2, 1])


class TestStructure:
    def test_star(self):
        dtd = DagTreeDecomposition.star({0}, [{1}, {2, 3}])
        assert dtd.parents == (-1, 0, 0)
        assert dtd.root == 0
        assert dtd.children[0] == (1, 2)
        assert dtd.width == 2

    def test_postorder_ends_at_root(self):
        dtd = DagTreeDecomposition.from_nodes([(5, -1, {0}), (3, 5, {1}), (9, 3, {2})])
        assert dtd.postorder() == [2, 1, 0]
        assert dtd.tree_path(2, 0) == [2, 1, 0]

    def test_from_nodes_unknown_parent(self):
        with pytest.raises(DecompositionError):
            DagTreeDecomposition.from_nodes([(0, -1, {0}), (1, 4, {1})])

    def test_from_nodes_duplicate_id(self):
        with pytest.raises(DecompositionError):
            DagTreeDecomposition.from_nodes([(0, -1, {0}), (0, 0, {1})])

    def test_length_mismatch(self):
        with pytest.raises(DecompositionError):
            DagTreeDecomposition((frozenset({0}),), (-1, 0))

    def test_two_roots(self):
        dtd = DagTreeDecomposition((frozenset({0}), frozenset({1})), (-1, -1))
        assert dtd.structure_problem() is not None


class TestValidate:
    def test_valid_star(self, vee):
        result = validate_dtd(vee, DagTreeDecomposition.star({0}, [{2}]))
        assert result.ok
        assert result.witness == ()

    def test_single_bag_of_all_sources(self, vee):
        assert validate_dtd(vee, DagTreeDecomposition.single({0, 2})).ok

    def test_not_a_tree(self, vee):
        dtd = DagTreeDecomposition((frozenset({0}), frozenset({2})), (-1, -1))
        assert validate_dtd(vee, dtd).condition == "tree"

    def test_stray_vertex(self, vee):
        result = validate_dtd(vee, DagTreeDecomposition.single({0, 7}))
        assert not result.ok
        assert result.condition == "bags"

    def test_uncovered_source(self, vee):
        result = validate_dtd(vee, DagTreeDecomposition.single({0}))
        assert result.condition == "coverage"
        assert result.witness == (2,)

    def test_broken_path(self, vee):
        """Vertex 0 is reached from the root and the leaf but not the middle bag."""
        dtd = DagTreeDecomposition.from_nodes([(0, -1, {0}), (1, 0, {2}), (2, 1, {0})])
        result = validate_dtd(vee, dtd)
        assert result.condition == "path"
        assert result.witness[1] == 1
        assert result.witness[3] == 0
        assert {result.witness[0], result.witness[2]} == {0, 2}

    def test_require_valid(self, vee):
        dtd = DagTreeDecomposition.single({0, 2})
        assert require_valid(vee, dtd) is dtd
        with pytest.raises(DecompositionError, match="coverage"):
            require_valid(vee, DagTreeDecomposition.single({2}))


def first_broken_clause(dag, bags, parents):
    """Clause checker written straight from the definition, or None when all hold."""
    nodes = range(len(bags))
    if any(p != -1 and p not in nodes for p in parents):
        return "tree"
    tree = nx.DiGraph()
    tree.add_nodes_from(nodes)
    tree.add_edges_from((p, i) for i, p in enumerate(parents) if p != -1)
    if not nx.is_arborescence(tree):
        return "tree"
    if any(not bag <= dag.vertex_set for bag in bags):
        return "bags"
    arcs = nx.DiGraph()
    arcs.add_nodes_from(dag.vertex_set)
    arcs.add_edges_from(dag.arc_list())
    closures = [set(bag).union(*(nx.descendants(arcs, b) for b in bag)) for bag in bags]
    if set().union(*closures) != dag.vertex_set:
        return "coverage"
    undirected = tree.to_undirected()
    for a, b in combinations(nodes, 2):
        for v in closures[a] & closures[b]:
            if any(v not in closures[x] for x in nx.shortest_path(undirected, a, b)):
                return "path"
    return None


def random_decomposition_cases(count: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(2, 8))
        graph = random_graph(n, float(rng.uniform(0.3, 0.7)), rng)
        dag = orient_by_order(graph, [int(v) for v in rng.permutation(n)])
        t = int(rng.integers(1, 6))
        if rng.random() < 0.85:
            labels = [int(x) for x in rng.permutation(t)]
            parents = [-1] * t
            for i in range(1, t):
                parents[labels[i]] = labels[int(rng.integers(0, i))]
        else:
            parents = [int(p) for p in rng.integers(-1, t + 1, size=t)]
        bags = []
        for _ in range(t):
            bag = {s for s in dag.sources if rng.random() < 0.6}
            bag |= {v for v in range(n) if rng.random() < 0.15}
            if rng.random() < 0.03:
                bag.add(n)
            bags.append(frozenset(bag))
        yield dag, bags, parents


def test_validator_agrees_with_definition():
    verdicts = []
    for dag, bags, parents in random_decomposition_cases(500, seed=17):
        expected = first_broken_clause(dag, bags, parents)
        result = validate_dtd(dag, DagTreeDecomposition(tuple(bags), tuple(parents)))
        assert result.ok == (expected is None)
        if expected is not None:
            assert result.condition == expected
        verdicts.append(expected)
    assert None in verdicts
    assert {"tree", "coverage", "path"} <= set(verdicts)
