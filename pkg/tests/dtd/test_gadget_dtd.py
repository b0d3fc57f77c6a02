"""Tests for tree decompositions of base graphs and gadget-built decompositions."""

import pytest

from degencount.core.errors import DecompositionError, GadgetError
from degencount.core.generators import clique, cycle, grid, path
from degencount.dtd.decomposition import validate_dtd
from degencount.dtd.gadget_dtd import dtd_from_fgadget, fgadget_width_bound
from degencount.dtd.oriented import orient_by_order, orientations
from degencount.dtd.tree_decomposition import (
    TreeDecomposition,
    tree_decomposition_of,
    trivial_tree_decomposition,
    validate_tree_decomposition,
)
from degencount.gadgets.fgadget import fgadget_from_subdivision


class TestTreeDecomposition:
    @pytest.mark.parametrize(
        "graph, width",
        [(path(4), 1), (cycle(5), 2), (clique(4), 3)],
    )
    def test_heuristic(self, graph, width):
        td = tree_decomposition_of(graph)
        assert validate_tree_decomposition(graph, td).ok
        assert td.width == width

    def test_grid_is_valid(self):
        td = tree_decomposition_of(grid(3))
        assert validate_tree_decomposition(grid(3), td).ok
        assert td.width >= 3

    def test_trivial(self):
        td = trivial_tree_decomposition(cycle(4))
        assert td.width == 3
        assert validate_tree_decomposition(cycle(4), td).ok

    def test_missing_vertex(self):
        td = TreeDecomposition((frozenset({0, 1}),), (-1,))
        assert validate_tree_decomposition(path(3), td).condition == "vertices"

    def test_missing_edge(self):
        td = TreeDecomposition((frozenset({0, 1}), frozenset({2})), (-1, 0))
        result = validate_tree_decomposition(path(3), td)
        assert result.condition == "edges"
        assert result.witness == ((1, 2),)

    def test_disconnected_vertex(self):
        td = TreeDecomposition(
            (frozenset({0, 1}), frozenset({1, 2}), frozenset({0})), (-1, 0, 1)
        )
        result = validate_tree_decomposition(path(3), td)
        assert result.condition == "connectivity"
        assert result.witness == (0,)


class TestGadgetDtd:
    @pytest.fixture
    def subdivided_triangle(self):
        return fgadget_from_subdivision(clique(3))

    def test_every_orientation(self, subdivided_triangle):
        pattern, gadget = subdivided_triangle
        td = tree_decomposition_of(gadget.base)
        for dag in orientations(pattern):
            dtd = dtd_from_fgadget(dag, gadget, td)
            assert validate_dtd(dag, dtd).ok
            assert dtd.width <= fgadget_width_bound(dag, gadget, td)
            assert dtd.parents == td.parents

    def test_bound_for_natural_orientation(self, subdivided_triangle):
        """Base vertices first: every block has one local source and R is empty."""
        pattern, gadget = subdivided_triangle
        dag = orient_by_order(pattern, range(pattern.n))
        td = trivial_tree_decomposition(gadget.base)
        assert fgadget_width_bound(dag, gadget, td) == 9
        assert dtd_from_fgadget(dag, gadget, td).width == 6

    def test_subdivided_grid(self):
        pattern, gadget = fgadget_from_subdivision(grid(2))
        dag = orient_by_order(pattern, range(pattern.n))
        td = tree_decomposition_of(gadget.base)
        assert validate_dtd(dag, dtd_from_fgadget(dag, gadget, td)).ok

    def test_gadget_for_other_pattern(self, subdivided_triangle):
        _, gadget = subdivided_triangle
        dag = orient_by_order(cycle(6), range(6))
        with pytest.raises(GadgetError):
            dtd_from_fgadget(dag, gadget, tree_decomposition_of(gadget.base))

    def test_bad_tree_decomposition(self, subdivided_triangle):
        pattern, gadget = subdivided_triangle
        dag = orient_by_order(pattern, range(pattern.n))
        td = TreeDecomposition((frozenset({0, 1}),), (-1,))
        with pytest.raises(DecompositionError):
            dtd_from_fgadget(dag, gadget, td)
