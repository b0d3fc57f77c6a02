"""Ordinary (undirected) tree decompositions, used for the base graph of a gadget."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from networkx.algorithms.approximation import treewidth_min_degree

from ..core.generators import to_networkx
from ..core.graph import Graph
from ..core.validation import ValidationResult
from .decomposition import DagTreeDecomposition


@dataclass(frozen=True)
class TreeDecomposition:
    """Rooted tree decomposition; ``parents[i]`` is -1 for the root."""

    bags: tuple[frozenset[int], ...]
    parents: tuple[int, ...]

    @property
    def width(self) -> int:
        """Treewidth convention: largest bag size minus one."""
        return max((len(b) for b in self.bags), default=0) - 1

    def as_tree(self) -> DagTreeDecomposition:
        """Same tree and bags, reusing the dag decomposition's tree helpers."""
        return DagTreeDecomposition(self.bags, self.parents)


def validate_tree_decomposition(graph: Graph, td: TreeDecomposition) -> ValidationResult:
    """Check vertex coverage, edge coverage and connectivity of each vertex's bags."""
    tree = td.as_tree()
    problem = tree.structure_problem()
    if problem is not None:
        return ValidationResult.failed("tree", problem)
    covered = set().union(*td.bags) if td.bags else set()
    stray = covered - set(graph.vertices)
    if stray:
        return ValidationResult.failed("bags", f"bags hold non-vertices {sorted(stray)}")
    missing = set(graph.vertices) - covered
    if missing:
        return ValidationResult.failed("vertices", f"vertices {sorted(missing)} are in no bag")
    for u, v in graph.sorted_edges():
        if not any(u in b and v in b for b in td.bags):
            return ValidationResult.failed("edges", f"edge ({u}, {v}) is in no bag", (u, v))
    for v in graph.vertices:
        holding = [i for i, b in enumerate(td.bags) if v in b]
        # connected iff exactly one holder has its parent outside the holders
        tops = [i for i in holding if tree.parents[i] == -1 or v not in td.bags[tree.parents[i]]]
        if len(tops) > 1:
            return ValidationResult.failed(
                "connectivity", f"bags holding vertex {v} are disconnected", v
            )
    return ValidationResult.passed()


def tree_decomposition_of(graph: Graph) -> TreeDecomposition:
    """Heuristic tree decomposition via minimum-degree elimination, rooted deterministically."""
    if graph.n == 0:
        return TreeDecomposition((frozenset(),), (-1,))
    _, decomp = treewidth_min_degree(to_networkx(graph))
    nodes = sorted(decomp.nodes(), key=lambda bag: (sorted(bag), len(bag)))
    root = nodes[0]
    index = {root: 0}
    parents = [-1]
    queue = deque([root])
    while queue:
        bag = queue.popleft()
        for nbr in sorted(decomp.neighbors(bag), key=sorted):
            if nbr not in index:
                index[nbr] = len(parents)
                parents.append(index[bag])
                queue.append(nbr)
    bags = [frozenset()] * len(parents)
    for bag, i in index.items():
        bags[i] = frozenset(bag)
    return TreeDecomposition(tuple(bags), tuple(parents))


def trivial_tree_decomposition(graph: Graph) -> TreeDecomposition:
    return TreeDecomposition((frozenset(graph.vertices),), (-1,))
