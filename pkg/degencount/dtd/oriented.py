"""Acyclic orientations of pattern graphs, with sources, joints and reachability."""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Collection, Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from typing import Protocol

from ..core.errors import GraphError
from ..core.graph import Graph, normalise_edge

logger = logging.getLogger(__name__)

Arc = tuple[int, int]


class DagLike(Protocol):
    """Anything a dag tree decomposition can be checked against."""

    @property
    def vertex_set(self) -> frozenset[int]: ...

    @property
    def sources(self) -> tuple[int, ...]: ...

    def closure(self, bag: Iterable[int]) -> frozenset[int]: ...


@dataclass(frozen=True)
class OrientedGraph:
    """An acyclic orientation of ``base``; arc ``(u, v)`` points from ``u`` to ``v``."""

    base: Graph
    arcs: frozenset[Arc]
    _out: tuple[tuple[int, ...], ...] = field(default=(), init=False, repr=False, compare=False)
    _in: tuple[tuple[int, ...], ...] = field(default=(), init=False, repr=False, compare=False)
    _topo: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = self.base.n
        if {normalise_edge(u, v) for u, v in self.arcs} != set(self.base.edges) or len(
            self.arcs
        ) != self.base.edge_count:
            raise GraphError("arcs must orient every edge of the base graph exactly once")
        out: list[list[int]] = [[] for _ in range(n)]
        inc: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.arcs:
            out[u].append(v)
            inc[v].append(u)
        # Kahn's algorithm; leftover vertices mean a directed cycle
        indegree = [len(i) for i in inc]
        queue = deque(v for v in range(n) if indegree[v] == 0)
        topo: list[int] = []
        while queue:
            u = queue.popleft()
            topo.append(u)
            for w in sorted(out[u]):
                indegree[w] -= 1
                if indegree[w] == 0:
                    queue.append(w)
        if len(topo) != n:
            raise GraphError("orientation contains a directed cycle")
        object.__setattr__(self, "_out", tuple(tuple(sorted(o)) for o in out))
        object.__setattr__(self, "_in", tuple(tuple(sorted(i)) for i in inc))
        object.__setattr__(self, "_topo", tuple(topo))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(range(self.base.n))

    @property
    def topological_order(self) -> tuple[int, ...]:
        return self._topo

    def out_neighbours(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbours(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    @cached_property
    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.n) if not self._in[v])

    @cached_property
    def _reach(self) -> tuple[frozenset[int], ...]:
        reach: list[frozenset[int]] = [frozenset()] * self.n
        for v in reversed(self._topo):
            acc = {v}
            for w in self._out[v]:
                acc |= reach[w]
            reach[v] = frozenset(acc)
        return tuple(reach)

    def reach(self, v: int) -> frozenset[int]:
        """Vertices reachable from ``v``, including ``v``."""
        return self._reach[v]

    def closure(self, bag: Iterable[int]) -> frozenset[int]:
        """Vertex set of the sub-dag reachable from ``bag``."""
        acc: set[int] = set()
        for b in bag:
            acc |= self._reach[b]
        return frozenset(acc)

    def plus_closure(self, sources: Iterable[int]) -> frozenset[int]:
        """Vertices reachable from ``sources`` other than ``sources`` themselves."""
        src = frozenset(sources)
        return self.closure(src) - src

    @cached_property
    def reaching_sources(self) -> tuple[frozenset[int], ...]:
        """For each vertex, the sources it is reachable from."""
        by_vertex: list[set[int]] = [set() for _ in range(self.n)]
        for s in self.sources:
            for v in self._reach[s]:
                by_vertex[v].add(s)
        return tuple(frozenset(b) for b in by_vertex)

    @cached_property
    def joints(self) -> frozenset[int]:
        """Vertices reachable from at least two distinct sources."""
        return frozenset(v for v in range(self.n) if len(self.reaching_sources[v]) >= 2)

    def joints_of(self, sources: Iterable[int]) -> frozenset[int]:
        return self.closure(sources) & self.joints

    def local_sources(self, vertices: Collection[int]) -> frozenset[int]:
        """Vertices of ``vertices`` with no in-neighbour inside ``vertices``."""
        vs = set(vertices)
        return frozenset(v for v in vs if not any(u in vs for u in self._in[v]))

    def arc_list(self) -> list[Arc]:
        return sorted(self.arcs)


def orient_by_order(graph: Graph, order: Sequence[int]) -> OrientedGraph:
    """Orient every edge from the endpoint earlier in ``order`` to the later one."""
    if sorted(order) != list(range(graph.n)):
        raise GraphError("order is not a permutation of the vertices")
    pos = [0] * graph.n
    for i, v in enumerate(order):
        pos[v] = i
    arcs = frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in graph.edges)
    return OrientedGraph(graph, arcs)


def orientations(graph: Graph) -> Iterator[OrientedGraph]:
    """Yield every acyclic orientation of ``graph`` exactly once.

    Edges are directed one at a time in sorted order; a direction is skipped
    when its head already reaches its tail, so no cyclic partial orientation
    is ever extended.
    """
    edges = graph.sorted_edges()
    n = graph.n
    chosen: list[Arc] = []

    def extend(i: int, reach: list[frozenset[int]]) -> Iterator[OrientedGraph]:
        if i == len(edges):
            yield OrientedGraph(graph, frozenset(chosen))
            return
        u, v = edges[i]
        for tail, head in ((u, v), (v, u)):
            if tail in reach[head]:
                continue
            grown = reach[head]
            updated = [r | grown if tail in r else r for r in reach]
            chosen.append((tail, head))
            yield from extend(i + 1, updated)
            chosen.pop()

    yield from extend(0, [frozenset({v}) for v in range(n)])


def count_orientations(graph: Graph) -> int:
    total = sum(1 for _ in orientations(graph))
    logger.debug(f"{total} acyclic orientations for n={graph.n}, m={graph.edge_count}")
    return total
