"""Simple undirected graphs, vertex partitions and coloured graphs.

Vertices are dense integer ids ``0..n-1``. External formats remap arbitrary
labels on ingestion, so kernels can index arrays by vertex id.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field

from .errors import ColouringError, GraphError

Edge = tuple[int, int]


def normalise_edge(u: int, v: int) -> Edge:
    """Return the edge ``{u, v}`` as an ordered pair with ``u < v``."""
    if u == v:
        raise GraphError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Attributes:
        n: Number of vertices, named ``0..n-1``
        edges: Set of edges stored as ``(u, v)`` with ``u < v``
    """

    n: int
    edges: frozenset[Edge] = frozenset()
    _adj: tuple[frozenset[int], ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not normalised or out of range")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from unordered pairs; duplicates collapse."""
        return cls(n, frozenset(normalise_edge(u, v) for u, v in edges))

    @classmethod
    def empty(cls, n: int) -> Graph:
        return cls(n)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbours(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        """All vertex pairs that are not edges, in lexicographic order."""
        return [
            (u, v) for u in range(self.n) for v in range(u + 1, self.n) if v not in self._adj[u]
        ]

    def induced_subgraph(self, keep: Iterable[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph on ``keep``.

        Returns:
            The subgraph with vertices renumbered in increasing order of the
            original ids, and the list mapping new ids back to original ids.
        """
        order = sorted(set(keep))
        index = {v: i for i, v in enumerate(order)}
        edges = frozenset(
            (index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(order), edges), order

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabelling is not a permutation")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def add_edges(self, extra: Iterable[tuple[int, int]]) -> Graph:
        """Edge-supergraph on the same vertex set."""
        return Graph(self.n, self.edges | {normalise_edge(u, v) for u, v in extra})

    def remove_edge(self, u: int, v: int) -> Graph:
        return Graph(self.n, self.edges - {normalise_edge(u, v)})

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(b not in self._adj[a] for i, a in enumerate(vs) for b in vs[i + 1 :])

    def connected_components(self) -> list[list[int]]:
        """Connected components, each sorted, ordered by smallest vertex."""
        seen = [False] * self.n
        components: list[list[int]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            comp = [start]
            while queue:
                u = queue.popleft()
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        comp.append(w)
                        queue.append(w)
            components.append(sorted(comp))
        return components

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def is_connected_subset(self, vertices: Iterable[int]) -> bool:
        """Check whether ``vertices`` induce a connected, nonempty subgraph."""
        vs = set(vertices)
        if not vs:
            return False
        start = next(iter(vs))
        seen = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if w in vs and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen == vs

    def disjoint_union(self, other: Graph) -> Graph:
        shift = self.n
        return Graph(
            self.n + other.n,
            self.edges | {(u + shift, v + shift) for u, v in other.edges},
        )

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))

    def __len__(self) -> int:
        return self.n


@dataclass(frozen=True)
class VertexPartition:
    """Partition of ``{0..n-1}`` into disjoint nonempty blocks.

    Blocks are kept sorted by their smallest element, so block ``i`` is
    vertex ``i`` of the quotient graph.
    """

    n: int
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        ordered = tuple(
            sorted((frozenset(b) for b in self.blocks), key=lambda b: min(b, default=-1))
        )
        seen: set[int] = set()
        for block in ordered:
            if not block:
                raise GraphError("partition has an empty block")
            if seen & block:
                raise GraphError("partition blocks overlap")
            seen |= block
        if seen != set(range(self.n)):
            raise GraphError("partition does not cover every vertex")
        object.__setattr__(self, "blocks", ordered)

    @classmethod
    def discrete(cls, n: int) -> VertexPartition:
        return cls(n, tuple(frozenset({v}) for v in range(n)))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> VertexPartition:
        """Partition grouping vertices that share a label."""
        groups: dict[int, set[int]] = {}
        for v, label in enumerate(labels):
            groups.setdefault(label, set()).add(v)
        return cls(len(labels), tuple(frozenset(g) for g in groups.values()))

    def block_of(self) -> list[int]:
        """Map each vertex to the index of its block."""
        owner = [0] * self.n
        for i, block in enumerate(self.blocks):
            for v in block:
                owner[v] = i
        return owner

    def __len__(self) -> int:
        return len(self.blocks)


def set_partitions(n: int) -> Iterator[VertexPartition]:
    """Enumerate every partition of ``{0..n-1}`` via restricted growth strings."""
    if n == 0:
        yield VertexPartition(0, ())
        return
    labels = [0] * n

    def extend(pos: int, top: int) -> Iterator[VertexPartition]:
        if pos == n:
            yield VertexPartition.from_labels(labels)
            return
        for label in range(top + 2):
            labels[pos] = label
            yield from extend(pos + 1, max(top, label))

    labels[0] = 0
    yield from extend(1, 0)


@dataclass(frozen=True)
class ColouredGraph:
    """Graph with a total vertex colouring.

    Colour ids are nonnegative integers. For an H-coloured graph the colours
    are vertices of H; for a k-vertex-coloured graph they are ``0..k-1``.
    """

    graph: Graph
    colours: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.colours) != self.graph.n:
            raise ColouringError(
                f"colouring has {len(self.colours)} entries for {self.graph.n} vertices"
            )
        if any(c < 0 for c in self.colours):
            raise ColouringError("colours must be nonnegative")

    @property
    def n(self) -> int:
        return self.graph.n

    def colour_classes(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(self.colours):
            classes.setdefault(c, []).append(v)
        return classes

    def used_colours(self) -> frozenset[int]:
        return frozenset(self.colours)

    def is_surjective(self, palette: Iterable[int]) -> bool:
        return set(palette) <= set(self.colours)

    def is_homomorphism_to(self, target: Graph) -> bool:
        """Check that the colouring maps every edge onto an edge of ``target``."""
        if any(c >= target.n for c in self.colours):
            return False
        return all(target.has_edge(self.colours[u], self.colours[v]) for u, v in self.graph.edges)

    def require_homomorphism_to(self, target: Graph) -> None:
        if any(c >= target.n for c in self.colours):
            raise ColouringError("colour outside the pattern's vertex range")
        for u, v in self.graph.edges:
            cu, cv = self.colours[u], self.colours[v]
            if not target.has_edge(cu, cv):
                raise ColouringError(f"edge ({u}, {v}) maps to non-edge ({cu}, {cv})")

    def with_mapping(self, mapping: Mapping[int, int]) -> ColouredGraph:
        """Recolour through ``mapping`` (colours not in it are kept)."""
        return ColouredGraph(self.graph, tuple(mapping.get(c, c) for c in self.colours))
