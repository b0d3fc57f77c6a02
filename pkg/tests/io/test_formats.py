"""Tests for the text formats."""

import pytest

from degencount.core.errors import FormatError, GraphError
from degencount.core.generators import clique, cycle, grid
from degencount.core.graph import Graph
from degencount.dtd.decomposition import DagTreeDecomposition
from degencount.dtd.parse_tree import ParseOp
from degencount.gadgets.fgadget import fgadget_from_subdivision, validate_fgadget
from degencount.gadgets.witness import even_block_model
from degencount.io.formats import (
    content_lines,
    format_colouring,
    format_dtd,
    format_gadget,
    format_graph,
    format_partition,
    format_witness,
    parse_colouring,
    parse_dtd,
    parse_gadget,
    parse_graph,
    parse_parse_tree,
    parse_partition,
    parse_witness,
    read_graph,
    resolve_graph,
    write_graph,
)

SUBDIVIDED_TRIANGLE = """\
# triangle with every edge subdivided once
F: clique:3
S 0: 0
S 1: 1
S 2: 2
P 0 1: 3 0 1
P 0 2: 4 0 2
P 1 2: 5 1 2
"""


class TestContentLines:
    def test_strips_comments_and_blanks(self):
        text = "# header\n\n3 1  # trailing\n  0 1\n"
        assert list(content_lines(text)) == [(3, "3 1"), (4, "0 1")]


class TestGraphFormat:
    def test_parse(self):
        graph = parse_graph("3 2\n0 1\n2 1\n")
        assert graph.n == 3
        assert graph.sorted_edges() == [(0, 1), (1, 2)]

    def test_format_is_sorted(self):
        graph = Graph.from_edges(3, [(2, 1), (1, 0)])
        assert format_graph(graph) == "3 2\n0 1\n1 2\n"

    def test_isolated_vertices_survive(self):
        assert parse_graph("5 1\n0 4\n").n == 5

    def test_file_round_trip(self, tmp_path):
        path = tmp_path / "grid.el"
        write_graph(grid(3), path)
        assert read_graph(path) == grid(3)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("3 1\n1 1\n", 2),
            ("3 1\n0 3\n", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 1\n0 x\n", 2),
            ("3\n", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(FormatError) as info:
            parse_graph(text)
        assert info.value.line == line

    def test_edge_count_mismatch(self):
        with pytest.raises(FormatError):
            parse_graph("3 2\n0 1\n")

    def test_empty_file(self):
        with pytest.raises(FormatError):
            parse_graph("# nothing\n")


class TestResolveGraph:
    def test_inline_spec(self):
        assert resolve_graph("cycle:5") == cycle(5)

    def test_file(self, tmp_path):
        path = tmp_path / "k4.el"
        write_graph(clique(4), path)
        assert resolve_graph(str(path)) == clique(4)

    def test_unknown_family_treated_as_path(self):
        with pytest.raises(OSError):
            resolve_graph("nosuchfamily:3")

    def test_bad_parameters(self):
        with pytest.raises(GraphError):
            resolve_graph("clique:x")


class TestColouringsAndPartitions:
    def test_colouring(self):
        assert parse_colouring("0\n1\n# gap\n0\n", 3) == (0, 1, 0)
        assert format_colouring((2, 0)) == "2\n0\n"

    def test_colouring_length_checked(self):
        with pytest.raises(FormatError):
            parse_colouring("0\n1\n", 3)

    def test_negative_colour(self):
        with pytest.raises(FormatError):
            parse_colouring("-1\n")

    def test_partition(self):
        partition = parse_partition("0 2\n1\n", 3)
        assert partition.block_of() == [0, 1, 0]
        assert format_partition(partition) == "0 2\n1\n"

    def test_partition_must_cover(self):
        with pytest.raises(FormatError):
            parse_partition("0\n", 2)


class TestDtdFormat:
    def test_parse_with_arbitrary_ids(self):
        dtd = parse_dtd("10 -1: 0\n7 10: 1 2\n")
        assert dtd.bags == (frozenset({0}), frozenset({1, 2}))
        assert dtd.parents == (-1, 0)
        assert dtd.width == 2

    def test_format(self):
        dtd = DagTreeDecomposition.star({0}, [{1}, {2, 3}])
        assert format_dtd(dtd) == "0 -1: 0\n1 0: 1\n2 0: 2 3\n"

    def test_missing_colon(self):
        with pytest.raises(FormatError) as info:
            parse_dtd("0 -1 0 1\n")
        assert info.value.line == 1


class TestParseTreeFormat:
    def test_single_edge(self):
        text = "0 -1 CLIQUE 1 2\n1 0 UNION\n2 1 CREATE 1 0\n3 1 create 2 1\n"
        tree = parse_parse_tree(text)
        assert [node.op for node in tree.nodes] == [
            ParseOp.CLIQUE,
            ParseOp.UNION,
            ParseOp.CREATE,
            ParseOp.CREATE,
        ]
        assert tree.nodes[3].parent == 1
        assert tree.label_count == 2

    def test_unknown_operation(self):
        with pytest.raises(FormatError):
            parse_parse_tree("0 -1 JOIN 1 2\n")

    def test_unknown_parent(self):
        with pytest.raises(FormatError):
            parse_parse_tree("0 5 CREATE 1 0\n")


class TestGadgetFormat:
    def test_parse_inline_base(self):
        gadget = parse_gadget(SUBDIVIDED_TRIANGLE)
        pattern, expected = fgadget_from_subdivision(clique(3))
        assert gadget == expected
        assert validate_fgadget(clique(3), pattern, gadget).ok

    def test_edge_list_base(self):
        _, expected = fgadget_from_subdivision(cycle(4))
        assert parse_gadget(format_gadget(expected)) == expected

    def test_reversed_path_labels(self):
        """``P 1 0`` lists the end in S_1 first."""
        text = "F: clique:2\nS 0: 0\nS 1: 1\nP 1 0: 2 1 0\n"
        path = parse_gadget(text).paths[(0, 1)]
        assert (path.end_u, path.end_v) == (0, 1)

    def test_path_for_non_edge(self):
        text = "F: path:3\nS 0: 0\nS 1: 1\nS 2: 2\nP 0 2: 3 0 2\n"
        with pytest.raises(FormatError):
            parse_gadget(text)

    def test_missing_base(self):
        with pytest.raises(FormatError):
            parse_gadget("S 0: 0\n")


class TestWitnessFormat:
    def test_parse(self):
        witness = parse_witness("1: 2 3\n0: 0 1\n", induced=False)
        assert witness.blocks == (frozenset({0, 1}), frozenset({2, 3}))
        assert not witness.induced

    def test_format(self):
        witness = even_block_model(2)
        assert parse_witness(format_witness(witness)) == witness

    def test_gap_in_numbering(self):
        with pytest.raises(FormatError):
            parse_witness("0: 0\n2: 1\n")

    def test_repeated_vertex(self):
        with pytest.raises(FormatError) as info:
            parse_witness("0: 0\n0: 1\n")
        assert info.value.line == 2
