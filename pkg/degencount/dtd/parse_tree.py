"""Clique-width parse trees (k-expressions) and the decomposition they induce on a skeleton.

A parse tree builds a labelled graph bottom-up with four operations:
CREATE makes one labelled vertex, UNION joins two graphs, CLIQUE(i, j)
adds every edge between labels ``i`` and ``j``, RELAB(i, j) renames label
``i`` to ``j``.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property

from ..core.errors import DecompositionError
from ..core.graph import Graph
from .decomposition import DagTreeDecomposition, validate_dtd
from .oriented import OrientedGraph, orientations
from .skeleton import Skeleton, skeleton

logger = logging.getLogger(__name__)


class ParseOp(Enum):
    """Parse tree operations."""

    CREATE = "CREATE"  # args: (label, vertex)
    UNION = "UNION"
    CLIQUE = "CLIQUE"  # args: (i, j), i != j
    RELAB = "RELAB"  # args: (i, j)


ARITY: dict[ParseOp, int] = {
    ParseOp.CREATE: 0,
    ParseOp.UNION: 2,
    ParseOp.CLIQUE: 1,
    ParseOp.RELAB: 1,
}


@dataclass(frozen=True)
class ParseNode:
    op: ParseOp
    args: tuple[int, ...]
    parent: int  # -1 for the root


@dataclass(frozen=True)
class CliqueParseTree:
    """Parse tree stored as a node list with parent pointers."""

    nodes: tuple[ParseNode, ...]
    _kids: tuple[tuple[int, ...], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        roots = [i for i, node in enumerate(self.nodes) if node.parent == -1]
        if len(roots) != 1:
            raise DecompositionError(f"parse tree needs exactly one root, found {len(roots)}")
        kids: list[list[int]] = [[] for _ in self.nodes]
        for i, node in enumerate(self.nodes):
            if node.parent != -1:
                if not 0 <= node.parent < len(self.nodes) or node.parent == i:
                    raise DecompositionError(f"node {i} has invalid parent {node.parent}")
                kids[node.parent].append(i)
        for i, node in enumerate(self.nodes):
            if len(kids[i]) != ARITY[node.op]:
                raise DecompositionError(
                    f"node {i} ({node.op.value}) has {len(kids[i])} children, "
                    f"expected {ARITY[node.op]}"
                )
            expected_args = 0 if node.op is ParseOp.UNION else 2
            if len(node.args) != expected_args:
                raise DecompositionError(f"node {i} ({node.op.value}) has wrong arguments")
            if node.op is ParseOp.CLIQUE and node.args[0] == node.args[1]:
                raise DecompositionError(f"node {i}: CLIQUE needs two distinct labels")
        created = [n.args[1] for n in self.nodes if n.op is ParseOp.CREATE]
        if len(set(created)) != len(created):
            raise DecompositionError("a vertex is created twice")
        # every node must reach the root
        for start in range(len(self.nodes)):
            steps = 0
            node = start
            while node != -1:
                node = self.nodes[node].parent
                steps += 1
                if steps > len(self.nodes):
                    raise DecompositionError("parent pointers contain a cycle")
        object.__setattr__(self, "_kids", tuple(tuple(k) for k in kids))

    @property
    def root(self) -> int:
        return next(i for i, node in enumerate(self.nodes) if node.parent == -1)

    @property
    def children(self) -> tuple[tuple[int, ...], ...]:
        return self._kids

    @cached_property
    def labels(self) -> frozenset[int]:
        used: set[int] = set()
        for node in self.nodes:
            if node.op is ParseOp.CREATE:
                used.add(node.args[0])
            elif node.op in (ParseOp.CLIQUE, ParseOp.RELAB):
                used.update(node.args)
        return frozenset(used)

    @property
    def label_count(self) -> int:
        return len(self.labels)

    def postorder(self) -> list[int]:
        order: list[int] = []
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
            else:
                stack.append((node, True))
                stack.extend((c, False) for c in reversed(self.children[node]))
        return order

    def depth(self) -> list[int]:
        depth = [0] * len(self.nodes)
        for node in reversed(self.postorder()):
            parent = self.nodes[node].parent
            if parent != -1:
                depth[node] = depth[parent] + 1
        return depth


@dataclass(frozen=True)
class LabelledGraph:
    """Graph over arbitrary vertex ids with a label per vertex."""

    labels: dict[int, int]
    edges: frozenset[tuple[int, int]]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.labels)

    def label_class(self, label: int) -> list[int]:
        return sorted(v for v, lab in self.labels.items() if lab == label)

    def to_graph(self) -> tuple[Graph, list[int]]:
        """Dense relabelling; returns the graph and the new-to-old vertex list."""
        order = sorted(self.labels)
        index = {v: i for i, v in enumerate(order)}
        return Graph.from_edges(len(order), ((index[u], index[v]) for u, v in self.edges)), order


@dataclass
class ParseEvaluation:
    """Per-node results of evaluating a parse tree."""

    graphs: list[LabelledGraph] = field(default_factory=list)
    created_edges: list[frozenset[tuple[int, int]]] = field(default_factory=list)

    def root_graph(self, tree: CliqueParseTree) -> LabelledGraph:
        return self.graphs[tree.root]


def evaluate_parse_tree(tree: CliqueParseTree) -> ParseEvaluation:
    """Evaluate every node; also record the edges each CLIQUE node creates."""
    graphs: list[LabelledGraph | None] = [None] * len(tree.nodes)
    created: list[frozenset[tuple[int, int]]] = [frozenset()] * len(tree.nodes)
    for x in tree.postorder():
        node = tree.nodes[x]
        kids = [graphs[c] for c in tree.children[x]]
        match node.op:
            case ParseOp.CREATE:
                label, vertex = node.args
                graphs[x] = LabelledGraph({vertex: label}, frozenset())
            case ParseOp.UNION:
                left, right = kids
                assert left is not None and right is not None
                if left.vertices & right.vertices:
                    raise DecompositionError(f"node {x}: UNION of overlapping vertex sets")
                graphs[x] = LabelledGraph({**left.labels, **right.labels}, left.edges | right.edges)
            case ParseOp.CLIQUE:
                (child,) = kids
                assert child is not None
                i, j = node.args
                new = frozenset(
                    (min(u, v), max(u, v))
                    for u in child.label_class(i)
                    for v in child.label_class(j)
                )
                created[x] = new
                graphs[x] = LabelledGraph(dict(child.labels), child.edges | new)
            case ParseOp.RELAB:
                (child,) = kids
                assert child is not None
                i, j = node.args
                graphs[x] = LabelledGraph(
                    {v: (j if lab == i else lab) for v, lab in child.labels.items()}, child.edges
                )
    return ParseEvaluation([g for g in graphs if g is not None], created)


def dtd_from_clique_parse(skel: Skeleton, tree: CliqueParseTree) -> DagTreeDecomposition:
    """Turn a parse tree of the undirected skeleton into a dag tree decomposition.

    Each parse node ``x`` becomes the bag of designated sources of the
    representants at ``x`` (the smallest active vertex of each label). The
    result has the parse tree's shape and width at most its label count.

    Raises:
        DecompositionError: If the tree does not evaluate to the skeleton
    """
    evaluation = evaluate_parse_tree(tree)
    result = evaluation.root_graph(tree)
    if result.vertices != skel.vertex_set or result.edges != skel.undirected_edges():
        raise DecompositionError("parse tree does not evaluate to the undirected skeleton")
    sources = frozenset(skel.sources)
    depth = tree.depth()

    x_on: dict[int, int] = {}
    for x, node in enumerate(tree.nodes):
        if node.op is ParseOp.CREATE:
            x_on[node.args[1]] = x
    # x_off: creating node closest to the root; isolated vertices stay at their leaf
    x_off = dict(x_on)
    for x, edges in enumerate(evaluation.created_edges):
        for u, v in edges:
            for w in (u, v):
                if x_off[w] == x_on[w] or depth[x] < depth[x_off[w]]:
                    x_off[w] = x
    designated: dict[int, int] = {}
    for v in result.vertices:
        if v in sources:
            designated[v] = v
        else:
            at_off = evaluation.created_edges[x_off[v]]
            designated[v] = min(
                s for s in sources if (min(s, v), max(s, v)) in at_off
            )
    active_at: list[set[int]] = [set() for _ in tree.nodes]
    for v in result.vertices:
        x = x_on[v]
        while True:
            active_at[x].add(v)
            if x == x_off[v]:
                break
            x = tree.nodes[x].parent
    bags: list[frozenset[int]] = []
    for x in range(len(tree.nodes)):
        labels = evaluation.graphs[x].labels
        representants: dict[int, int] = {}
        for v in active_at[x]:
            lab = labels[v]
            if lab not in representants or v < representants[lab]:
                representants[lab] = v
        bags.append(frozenset(designated[r] for r in representants.values()))
    dtd = DagTreeDecomposition(tuple(bags), tuple(node.parent for node in tree.nodes))
    check = validate_dtd(skel, dtd)
    if not check.ok:
        raise DecompositionError(f"constructed decomposition is invalid: {check.message}")
    logger.debug(f"parse tree with {tree.label_count} labels gave width {dtd.width}")
    return dtd


class _Builder:
    def __init__(self) -> None:
        self.ops: list[tuple[ParseOp, tuple[int, ...], list[int]]] = []

    def add(self, op: ParseOp, args: tuple[int, ...], kids: list[int]) -> int:
        self.ops.append((op, args, kids))
        return len(self.ops) - 1

    def tree(self) -> CliqueParseTree:
        parents = [-1] * len(self.ops)
        for idx, (_, _, kids) in enumerate(self.ops):
            for k in kids:
                parents[k] = idx
        return CliqueParseTree(
            tuple(ParseNode(op, args, parents[i]) for i, (op, args, _) in enumerate(self.ops))
        )


def parse_tree_from_order(
    vertices: Iterable[int], edges: Iterable[tuple[int, int]], order: Sequence[int]
) -> CliqueParseTree:
    """Linear k-expression adding vertices one at a time in ``order``.

    Vertices that still have neighbours to come share a label when their
    future neighbourhoods coincide; finished vertices share one label. This
    gives an upper bound on clique-width, not the optimum.
    """
    vs = set(vertices)
    if set(order) != vs or len(order) != len(vs):
        raise DecompositionError("order must list every vertex exactly once")
    if not vs:
        raise DecompositionError("cannot build a parse tree for an empty graph")
    adj: dict[int, set[int]] = {v: set() for v in vs}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    position = {v: i for i, v in enumerate(order)}
    builder = _Builder()
    label_of_class: dict[frozenset[int], int] = {}
    free: list[int] = []
    next_label = 1

    def fresh() -> int:
        nonlocal next_label
        if free:
            free.sort()
            return free.pop(0)
        next_label += 1
        return next_label - 1

    current = -1
    for step, v in enumerate(order):
        label = fresh()
        leaf = builder.add(ParseOp.CREATE, (label, v), [])
        current = leaf if current < 0 else builder.add(ParseOp.UNION, (), [current, leaf])
        for key, other in sorted(label_of_class.items(), key=lambda kv: kv[1]):
            if v in key:
                current = builder.add(ParseOp.CLIQUE, (label, other), [current])
        # future neighbourhoods shrink by v; merge classes that now coincide
        regrouped: dict[frozenset[int], int] = {}
        for key, other in sorted(label_of_class.items(), key=lambda kv: kv[1]):
            new_key = key - {v}
            if new_key in regrouped:
                current = builder.add(ParseOp.RELAB, (other, regrouped[new_key]), [current])
                free.append(other)
            else:
                regrouped[new_key] = other
        own_key = frozenset(w for w in adj[v] if position[w] > step)
        if own_key in regrouped:
            current = builder.add(ParseOp.RELAB, (label, regrouped[own_key]), [current])
            free.append(label)
        else:
            regrouped[own_key] = label
        label_of_class = regrouped
    return builder.tree()


def skeleton_parse_tree(skel: Skeleton, joints_first: bool = False) -> CliqueParseTree:
    """Linear parse tree of the undirected skeleton (sources first unless ``joints_first``)."""
    groups = (skel.joints, skel.sources) if joints_first else (skel.sources, skel.joints)
    order = [v for group in groups for v in sorted(group)]
    return parse_tree_from_order(skel.vertex_set, skel.undirected_edges(), order)


def skeleton_cliquewidth_bound(graph: Graph) -> int:
    """Upper bound on skeleton clique-width: worst orientation, best of two linear orders."""
    best = 0
    for dag in orientations(graph):
        skel = skeleton(dag)
        if not skel.vertex_set:
            continue
        width = min(
            skeleton_parse_tree(skel, joints_first=flag).label_count for flag in (False, True)
        )
        best = max(best, width)
    return best


def dtd_from_orientation_parse(dag: OrientedGraph) -> DagTreeDecomposition:
    """Decomposition of ``dag`` built from a linear parse tree of its skeleton."""
    skel = skeleton(dag)
    return dtd_from_clique_parse(skel, skeleton_parse_tree(skel))
