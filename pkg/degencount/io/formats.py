"""Line-oriented text formats for graphs, colourings, decompositions, gadgets and witnesses.

Every format ignores blank lines and anything after ``#``. Parse errors are
raised as :class:`FormatError` carrying the offending line number.

Formats:
- Edge list: header ``n m``, then ``m`` lines ``u v``
- Colouring: one line per vertex holding its colour
- Partition: one block per line, space-separated vertex ids
- DTD: ``id parent: v1 v2 ...`` per node, the root has parent ``-1``
- Parse tree: ``id parent OP args`` with OP one of CREATE, UNION, CLIQUE, RELAB
- Gadget: sections ``F:``, ``S v: ids``, ``P u v: ids end_u end_v``, ``R: ids``
- Witness: ``u: ids`` per minor vertex
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from pathlib import Path

from ..core.errors import FormatError, GraphError
from ..core.graph import Edge, Graph, VertexPartition, normalise_edge
from ..core.patterns import PATTERNS
from ..dtd.decomposition import DagTreeDecomposition
from ..dtd.parse_tree import CliqueParseTree, ParseNode, ParseOp
from ..gadgets.fgadget import FGadget, GadgetPath
from ..gadgets.reduction import ReductionResult
from ..gadgets.witness import MinorWitness


def content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line number, stripped line)`` for every line with content."""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _ints(tokens: Sequence[str], number: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise FormatError(f"expected integers, got {' '.join(tokens)!r}", number) from exc


def _split_label(line: str, number: int) -> tuple[str, str]:
    head, sep, rest = line.partition(":")
    if not sep:
        raise FormatError("missing ':'", number)
    return head.strip(), rest.strip()


def _read(path: str | Path) -> str:
    return Path(path).read_text(encoding="utf-8")


# -- graphs -------------------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format.

    Raises:
        FormatError: On a bad header, a bad edge line, a self-loop, a
            duplicate edge, or an edge count that disagrees with the header
    """
    lines = list(content_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    number, header = lines[0]
    values = _ints(header.split(), number)
    if len(values) != 2 or values[0] < 0 or values[1] < 0:
        raise FormatError("header must be 'n m' with n, m >= 0", number)
    n, m = values
    edges: set[Edge] = set()
    for number, line in lines[1:]:
        pair = _ints(line.split(), number)
        if len(pair) != 2:
            raise FormatError("edge line must be 'u v'", number)
        u, v = pair
        if u == v:
            raise FormatError(f"self-loop at vertex {u}", number)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge ({u}, {v}) out of range for n={n}", number)
        edge = normalise_edge(u, v)
        if edge in edges:
            raise FormatError(f"duplicate edge {edge}", number)
        edges.add(edge)
    if len(edges) != m:
        raise FormatError(f"header declares {m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges))


def format_graph(graph: Graph) -> str:
    lines = [f"{graph.n} {graph.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph(_read(path))


def write_graph(graph: Graph, path: str | Path) -> None:
    Path(path).write_text(format_graph(graph), encoding="utf-8")


def resolve_graph(spec: str) -> Graph:
    """Build an inline pattern such as ``cycle:4``, or read an edge-list file."""
    if PATTERNS.is_spec(spec):
        return PATTERNS.build(spec)
    return read_graph(spec)


# -- colourings and partitions ------------------------------------------------


def parse_colouring(text: str, n: int | None = None) -> tuple[int, ...]:
    """Parse one nonnegative colour per line.

    Raises:
        FormatError: On a bad or negative colour, or a length other than ``n``
    """
    colours: list[int] = []
    for number, line in content_lines(text):
        values = _ints(line.split(), number)
        if len(values) != 1 or values[0] < 0:
            raise FormatError("colour line must hold one nonnegative integer", number)
        colours.append(values[0])
    if n is not None and len(colours) != n:
        raise FormatError(f"colouring has {len(colours)} entries for {n} vertices")
    return tuple(colours)


def format_colouring(colours: Sequence[int]) -> str:
    return "".join(f"{c}\n" for c in colours)


def read_colouring(path: str | Path, n: int | None = None) -> tuple[int, ...]:
    return parse_colouring(_read(path), n)


def parse_partition(text: str, n: int) -> VertexPartition:
    blocks = [frozenset(_ints(line.split(), number)) for number, line in content_lines(text)]
    try:
        return VertexPartition(n, tuple(blocks))
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_partition(partition: VertexPartition) -> str:
    return "".join(" ".join(map(str, sorted(b))) + "\n" for b in partition.blocks)


# -- decompositions -----------------------------------------------------------


def parse_dtd(text: str) -> DagTreeDecomposition:
    """Parse ``id parent: v1 v2 ...`` node lines; ids may be any distinct integers."""
    nodes: list[tuple[int, int, list[int]]] = []
    for number, line in content_lines(text):
        head, rest = _split_label(line, number)
        ids = _ints(head.split(), number)
        if len(ids) != 2:
            raise FormatError("node line must start with 'id parent:'", number)
        nodes.append((ids[0], ids[1], _ints(rest.split(), number)))
    if not nodes:
        raise FormatError("empty decomposition file")
    return DagTreeDecomposition.from_nodes(nodes)


def format_dtd(dtd: DagTreeDecomposition) -> str:
    return "".join(
        f"{i} {parent}: {' '.join(map(str, sorted(bag)))}".rstrip() + "\n"
        for i, (bag, parent) in enumerate(zip(dtd.bags, dtd.parents, strict=True))
    )


def read_dtd(path: str | Path) -> DagTreeDecomposition:
    return parse_dtd(_read(path))


def parse_parse_tree(text: str) -> CliqueParseTree:
    """Parse ``id parent OP args`` node lines into a :class:`CliqueParseTree`.

    ``CREATE`` takes ``label vertex``, ``CLIQUE`` and ``RELAB`` take two
    labels and ``UNION`` takes none.
    """
    rows: list[tuple[int, int, ParseOp, list[int]]] = []
    for number, line in content_lines(text):
        tokens = line.split()
        if len(tokens) < 3:
            raise FormatError("node line must be 'id parent OP args'", number)
        node_id, parent = _ints(tokens[:2], number)
        try:
            op = ParseOp(tokens[2].upper())
        except ValueError as exc:
            raise FormatError(f"unknown operation {tokens[2]!r}", number) from exc
        rows.append((node_id, parent, op, _ints(tokens[3:], number)))
    index = {node_id: i for i, (node_id, _, _, _) in enumerate(rows)}
    if len(index) != len(rows):
        raise FormatError("duplicate parse tree node id")
    nodes: list[ParseNode] = []
    for node_id, parent, op, args in rows:
        if parent != -1 and parent not in index:
            raise FormatError(f"node {node_id} has unknown parent {parent}")
        nodes.append(ParseNode(op, tuple(args), -1 if parent == -1 else index[parent]))
    return CliqueParseTree(tuple(nodes))


def format_parse_tree(tree: CliqueParseTree) -> str:
    return "".join(
        " ".join([str(i), str(node.parent), node.op.value, *map(str, node.args)]) + "\n"
        for i, node in enumerate(tree.nodes)
    )


def read_parse_tree(path: str | Path) -> CliqueParseTree:
    return parse_parse_tree(_read(path))


# -- gadgets and witnesses ----------------------------------------------------


def parse_gadget(text: str) -> FGadget:
    """Parse a gadget file.

    ``F:`` is followed either by an inline pattern spec on the same line or
    by an edge list on the following lines. Blocks missing from the file
    are empty, and so is ``R`` when absent.

    Raises:
        FormatError: On malformed sections or a block for a non-existent vertex or edge
    """
    base_lines: list[str] = []
    base_inline = ""
    in_base = False
    blocks: dict[int, frozenset[int]] = {}
    paths: dict[Edge, GadgetPath] = {}
    remainder: frozenset[int] = frozenset()
    seen_base = False
    for number, line in content_lines(text):
        head, sep, rest = line.partition(":")
        kind = head.split()[0].upper() if head.split() else ""
        if not sep or kind not in ("F", "S", "P", "R"):
            if not in_base:
                raise FormatError(f"unexpected line {line!r}", number)
            base_lines.append(line)
            continue
        in_base = False
        labels = _ints(head.split()[1:], number)
        values = _ints(rest.split(), number) if kind != "F" else []
        if kind == "F":
            seen_base = True
            base_inline = rest.strip()
            in_base = not base_inline
        elif kind == "S":
            if len(labels) != 1:
                raise FormatError("vertex block line must be 'S v: ids'", number)
            blocks[labels[0]] = frozenset(values)
        elif kind == "P":
            if len(labels) != 2 or len(values) < 3:
                raise FormatError("path line must be 'P u v: ids end_u end_v'", number)
            u, v = labels
            ends = (values[-2], values[-1]) if u < v else (values[-1], values[-2])
            paths[normalise_edge(u, v)] = GadgetPath(frozenset(values[:-2]), *ends)
        else:
            remainder = frozenset(values)
    if not seen_base:
        raise FormatError("gadget file has no 'F:' section")
    try:
        base = PATTERNS.build(base_inline) if base_inline else parse_graph("\n".join(base_lines))
    except GraphError as exc:
        raise FormatError(f"bad base graph: {exc}") from exc
    if any(not 0 <= v < base.n for v in blocks):
        raise FormatError("vertex block for a vertex outside F")
    if any(e not in base.edges for e in paths):
        raise FormatError("path block for a pair that is not an edge of F")
    ordered = tuple(blocks.get(v, frozenset()) for v in base.vertices)
    return FGadget(base, ordered, paths, remainder)


def format_gadget(gadget: FGadget) -> str:
    def ids(values: frozenset[int]) -> str:
        return " ".join(map(str, sorted(values)))

    lines = ["F:", format_graph(gadget.base).rstrip("\n")]
    lines.extend(f"S {v}: {ids(block)}".rstrip() for v, block in enumerate(gadget.blocks))
    for (u, v), p in sorted(gadget.paths.items()):
        lines.append(f"P {u} {v}: {ids(p.vertices)} {p.end_u} {p.end_v}")
    lines.append(f"R: {ids(gadget.remainder)}".rstrip())
    return "\n".join(lines) + "\n"


def read_gadget(path: str | Path) -> FGadget:
    return parse_gadget(_read(path))


def parse_witness(text: str, induced: bool = True) -> MinorWitness:
    """Parse ``u: ids`` lines; every minor vertex ``0..k-1`` appears exactly once."""
    blocks: dict[int, frozenset[int]] = {}
    for number, line in content_lines(text):
        head, rest = _split_label(line, number)
        label = _ints(head.split(), number)
        if len(label) != 1:
            raise FormatError("witness line must be 'u: ids'", number)
        if label[0] in blocks:
            raise FormatError(f"minor vertex {label[0]} listed twice", number)
        blocks[label[0]] = frozenset(_ints(rest.split(), number))
    if sorted(blocks) != list(range(len(blocks))):
        raise FormatError("minor vertices must be numbered 0..k-1")
    return MinorWitness(tuple(blocks[u] for u in range(len(blocks))), induced)


def format_witness(witness: MinorWitness) -> str:
    return "".join(
        f"{u}: {' '.join(map(str, sorted(block)))}".rstrip() + "\n"
        for u, block in enumerate(witness.blocks)
    )


def read_witness(path: str | Path, induced: bool = True) -> MinorWitness:
    return parse_witness(_read(path), induced)


def format_provenance(result: ReductionResult) -> str:
    """One ``vertex KIND sources pattern_vertex`` line per vertex of the reduced host."""
    return "".join(
        f"{x} {p.kind.name} {','.join(map(str, p.source)) or '-'} {p.pattern_vertex}\n"
        for x, p in enumerate(result.provenance)
    )


def write_reduction(result: ReductionResult, prefix: str | Path) -> list[Path]:
    """Write ``PREFIX.el``, ``PREFIX.col`` and ``PREFIX.prov``; return the paths."""
    base = Path(prefix)
    outputs = {
        base.with_name(base.name + ".el"): format_graph(result.host.graph),
        base.with_name(base.name + ".col"): format_colouring(result.host.colours),
        base.with_name(base.name + ".prov"): format_provenance(result),
    }
    for path, text in outputs.items():
        path.write_text(text, encoding="utf-8")
    return list(outputs)
