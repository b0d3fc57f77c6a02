"""Dag tree decompositions and their validator."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from ..core.errors import DecompositionError
from ..core.validation import ValidationResult
from .oriented import DagLike


@dataclass(frozen=True)
class DagTreeDecomposition:
    """Rooted tree of bags; ``parents[i]`` is the parent of node ``i`` (-1 for the root)."""

    bags: tuple[frozenset[int], ...]
    parents: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.bags) != len(self.parents):
            raise DecompositionError("bags and parents differ in length")

    @classmethod
    def single(cls, bag: Iterable[int]) -> DagTreeDecomposition:
        return cls((frozenset(bag),), (-1,))

    @classmethod
    def star(cls, root: Iterable[int], leaves: Sequence[Iterable[int]]) -> DagTreeDecomposition:
        """Root bag with one child per leaf bag."""
        return cls(
            (frozenset(root), *(frozenset(b) for b in leaves)),
            (-1, *(0 for _ in leaves)),
        )

    @classmethod
    def from_nodes(cls, nodes: Sequence[tuple[int, int, Iterable[int]]]) -> DagTreeDecomposition:
        """Build from ``(id, parent_id, bag)`` triples with arbitrary integer ids."""
        index = {node_id: i for i, (node_id, _, _) in enumerate(nodes)}
        if len(index) != len(nodes):
            raise DecompositionError("duplicate node id")
        parents: list[int] = []
        for node_id, parent, _ in nodes:
            if parent == -1:
                parents.append(-1)
            elif parent in index:
                parents.append(index[parent])
            else:
                raise DecompositionError(f"node {node_id} has unknown parent {parent}")
        return cls(tuple(frozenset(b) for _, _, b in nodes), tuple(parents))

    def __len__(self) -> int:
        return len(self.bags)

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0)

    def structure_problem(self) -> str | None:
        """Describe why the parent pointers do not form a rooted tree, if they do not."""
        roots = [i for i, p in enumerate(self.parents) if p == -1]
        if len(roots) != 1:
            return f"expected exactly one root, found {len(roots)}"
        for i, p in enumerate(self.parents):
            if p != -1 and not (0 <= p < len(self.bags)):
                return f"node {i} has parent {p} out of range"
        for start in range(len(self.bags)):
            seen = set()
            node = start
            while node != -1:
                if node in seen:
                    return f"parent pointers contain a cycle through node {node}"
                seen.add(node)
                node = self.parents[node]
        return None

    @cached_property
    def root(self) -> int:
        return self.parents.index(-1)

    @cached_property
    def children(self) -> tuple[tuple[int, ...], ...]:
        kids: list[list[int]] = [[] for _ in self.bags]
        for i, p in enumerate(self.parents):
            if p != -1:
                kids[p].append(i)
        return tuple(tuple(k) for k in kids)

    def postorder(self) -> list[int]:
        """Nodes with every child before its parent."""
        order: list[int] = []
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                order.append(node)
                continue
            stack.append((node, True))
            stack.extend((c, False) for c in reversed(self.children[node]))
        return order

    def tree_path(self, a: int, b: int) -> list[int]:
        """Nodes on the unique tree path from ``a`` to ``b``, both included."""
        up_a = [a]
        while self.parents[up_a[-1]] != -1:
            up_a.append(self.parents[up_a[-1]])
        position = {node: i for i, node in enumerate(up_a)}
        up_b = [b]
        while up_b[-1] not in position:
            up_b.append(self.parents[up_b[-1]])
        meet = up_b[-1]
        return up_a[: position[meet] + 1] + list(reversed(up_b[:-1]))


def _connected_in_tree(dtd: DagTreeDecomposition, nodes: set[int]) -> list[set[int]]:
    """Split ``nodes`` into components of the subforest they induce."""
    components: list[set[int]] = []
    remaining = set(nodes)
    while remaining:
        start = min(remaining)
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            nbrs = list(dtd.children[x])
            if dtd.parents[x] != -1:
                nbrs.append(dtd.parents[x])
            for y in nbrs:
                if y in remaining and y not in comp:
                    comp.add(y)
                    stack.append(y)
        remaining -= comp
        components.append(comp)
    return components


def validate_dtd(dag: DagLike, dtd: DagTreeDecomposition) -> ValidationResult:
    """Check the three decomposition clauses.

    Clause 3 holds exactly when, for each vertex ``v``, the nodes whose
    closure contains ``v`` form a connected subtree. On failure the witness
    is ``(node1, node_between, node2, vertex)``.
    """
    problem = dtd.structure_problem()
    if problem is not None:
        return ValidationResult.failed("tree", problem)
    vertices = dag.vertex_set
    for i, bag in enumerate(dtd.bags):
        stray = bag - vertices
        if stray:
            return ValidationResult.failed(
                "bags", f"bag {i} holds non-vertices {sorted(stray)}", i, min(stray)
            )
    closures = [dag.closure(bag) for bag in dtd.bags]
    covered: set[int] = set()
    for c in closures:
        covered |= c
    missing = vertices - covered
    if missing:
        return ValidationResult.failed(
            "coverage", f"vertices {sorted(missing)} are not reachable from any bag", min(missing)
        )
    for v in sorted(vertices):
        holding = {i for i, c in enumerate(closures) if v in c}
        components = _connected_in_tree(dtd, holding)
        if len(components) > 1:
            a, b = min(components[0]), min(components[1])
            between = next(x for x in dtd.tree_path(a, b) if x not in holding)
            return ValidationResult.failed(
                "path",
                f"vertex {v} is reachable from bags {a} and {b} but not from bag {between}",
                a,
                between,
                b,
                v,
            )
    return ValidationResult.passed()


def require_valid(dag: DagLike, dtd: DagTreeDecomposition) -> DagTreeDecomposition:
    result = validate_dtd(dag, dtd)
    if not result.ok:
        raise DecompositionError(f"invalid decomposition ({result.condition}): {result.message}")
    return dtd
