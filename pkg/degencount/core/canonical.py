"""Canonical labels and automorphism counts for pattern-sized graphs.

Canonical forms come from individualisation-refinement: colour refinement
to an equitable ordered partition, branching on the first smallest
non-singleton cell, and keeping the leaf whose adjacency bits (in graph6
order) are lexicographically largest. Automorphisms discovered at equal
leaves prune sibling branches in the same orbit.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Sequence
from functools import lru_cache

import networkx as nx

from ..config import EngineConfig
from .errors import BoundExceededError
from .graph import Graph

logger = logging.getLogger(__name__)

Cells = list[list[int]]


def _refine(graph: Graph, cells: Cells) -> Cells:
    """Refine an ordered partition until it is equitable.

    Each cell splits by the multiset of neighbour cells; sub-cells are
    ordered by that signature, which keeps the result isomorphism-invariant.
    """
    while True:
        cell_of = [0] * graph.n
        for idx, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = idx
        refined: Cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[tuple[int, int], ...], list[int]] = {}
            for v in cell:
                sig = tuple(sorted(Counter(cell_of[w] for w in graph.neighbours(v)).items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            refined.extend(sorted(groups[sig]) for sig in sorted(groups))
        cells = refined
        if not changed:
            return cells


def _certificate(graph: Graph, order: Sequence[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        vj = order[j]
        for i in range(j):
            cert = (cert << 1) | graph.has_edge(order[i], vj)
    return cert


class _OrbitSets:
    """Union-find over vertices, merged along automorphism generators."""

    def __init__(self, n: int, generators: list[tuple[int, ...]]) -> None:
        self._parent = list(range(n))
        for gamma in generators:
            for v, w in enumerate(gamma):
                self._union(v, w)

    def _find(self, v: int) -> int:
        while self._parent[v] != v:
            self._parent[v] = self._parent[self._parent[v]]
            v = self._parent[v]
        return v

    def _union(self, a: int, b: int) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            self._parent[max(ra, rb)] = min(ra, rb)

    def same(self, a: int, b: int) -> bool:
        return self._find(a) == self._find(b)


class _CanonicalSearch:
    def __init__(self, graph: Graph) -> None:
        self.graph = graph
        self.best_cert: int | None = None
        self.best_order: tuple[int, ...] = ()
        self.automorphisms: list[tuple[int, ...]] = []
        self.leaves = 0

    def run(self, cells: Cells, prefix: list[int]) -> None:
        cells = _refine(self.graph, cells)
        target = -1
        for idx, cell in enumerate(cells):
            if len(cell) > 1 and (target < 0 or len(cell) < len(cells[target])):
                target = idx
        if target < 0:
            self._leaf(tuple(c[0] for c in cells))
            return
        explored: list[int] = []
        for v in cells[target]:
            if explored:
                stabiliser = [
                    g for g in self.automorphisms if all(g[p] == p for p in prefix)
                ]
                orbits = _OrbitSets(self.graph.n, stabiliser)
                if any(orbits.same(v, u) for u in explored):
                    continue
            explored.append(v)
            rest = [u for u in cells[target] if u != v]
            branch = cells[:target] + [[v], rest] + cells[target + 1 :]
            self.run(branch, prefix + [v])

    def _leaf(self, order: tuple[int, ...]) -> None:
        self.leaves += 1
        cert = _certificate(self.graph, order)
        if self.best_cert is None or cert > self.best_cert:
            self.best_cert = cert
            self.best_order = order
        elif cert == self.best_cert:
            gamma = [0] * self.graph.n
            for a, b in zip(order, self.best_order, strict=True):
                gamma[a] = b
            if any(gamma[v] != v for v in range(self.graph.n)):
                self.automorphisms.append(tuple(gamma))


def _initial_cells(n: int, colours: tuple[int, ...] | None) -> Cells:
    if colours is None:
        return [list(range(n))] if n else []
    by_colour: dict[int, list[int]] = {}
    for v, c in enumerate(colours):
        by_colour.setdefault(c, []).append(v)
    return [by_colour[c] for c in sorted(by_colour)]


@lru_cache(maxsize=1 << 16)
def _canonical(graph: Graph, colours: tuple[int, ...] | None) -> tuple[str, tuple[int, ...]]:
    search = _CanonicalSearch(graph)
    if graph.n:
        search.run(_initial_cells(graph.n, colours), [])
    order = search.best_order
    position = [0] * graph.n
    for i, v in enumerate(order):
        position[v] = i
    relabelled = nx.Graph()
    relabelled.add_nodes_from(range(graph.n))
    relabelled.add_edges_from((position[u], position[v]) for u, v in graph.edges)
    label = nx.to_graph6_bytes(relabelled, header=False).decode("ascii").strip()
    if colours is not None:
        label += ":" + ".".join(str(colours[v]) for v in order)
    logger.debug(f"canonical form of n={graph.n} explored {search.leaves} leaves")
    return label, order


def _check_bound(graph: Graph, config: EngineConfig | None) -> None:
    bound = (config or EngineConfig()).small_graph_bound
    if graph.n > bound:
        raise BoundExceededError("canonical form vertex count", graph.n, bound)


def canonical_form(
    graph: Graph,
    colours: Sequence[int] | None = None,
    config: EngineConfig | None = None,
) -> str:
    """Canonical label: equal labels iff the (coloured) graphs are isomorphic.

    Args:
        graph: Graph with at most ``small_graph_bound`` vertices
        colours: Optional vertex colouring that isomorphisms must preserve
        config: Engine settings; defaults are used when omitted

    Returns:
        The graph6 string of the canonically relabelled graph, followed by
        ``:c0.c1...`` when a colouring is given
    """
    _check_bound(graph, config)
    return _canonical(graph, tuple(colours) if colours is not None else None)[0]


def canonical_order(
    graph: Graph,
    colours: Sequence[int] | None = None,
    config: EngineConfig | None = None,
) -> tuple[int, ...]:
    """Vertex order realising the canonical form; position ``i`` holds the new vertex ``i``."""
    _check_bound(graph, config)
    return _canonical(graph, tuple(colours) if colours is not None else None)[1]


def canonical_graph(graph: Graph, config: EngineConfig | None = None) -> Graph:
    order = canonical_order(graph, config=config)
    position = [0] * graph.n
    for i, v in enumerate(order):
        position[v] = i
    return graph.relabel(position)


def graph_from_label(label: str) -> Graph:
    """Decode an uncoloured canonical label back into a graph."""
    from .generators import from_networkx

    g6 = label.split(":", 1)[0]
    return from_networkx(nx.from_graph6_bytes(g6.encode("ascii")))


def are_isomorphic(g1: Graph, g2: Graph, config: EngineConfig | None = None) -> bool:
    if g1.n != g2.n or g1.edge_count != g2.edge_count:
        return False
    return canonical_form(g1, config=config) == canonical_form(g2, config=config)


def automorphism_count(
    graph: Graph,
    colours: Sequence[int] | None = None,
    config: EngineConfig | None = None,
) -> int:
    """Size of the (colour-preserving) automorphism group.

    Uses the orbit-stabiliser theorem: pick a vertex ``v`` in a non-singleton
    colour class, find its orbit by comparing canonical forms of the graph
    with ``v`` (resp. each candidate) individualised, then recurse on the
    stabiliser of ``v``.
    """
    _check_bound(graph, config)
    current = tuple(colours) if colours is not None else (0,) * graph.n
    total = 1
    while True:
        classes: dict[int, list[int]] = {}
        for v, c in enumerate(current):
            classes.setdefault(c, []).append(v)
        pivot_class = next((cls for _, cls in sorted(classes.items()) if len(cls) > 1), None)
        if pivot_class is None:
            return total
        v0 = pivot_class[0]

        def individualise(v: int, base: tuple[int, ...] = current) -> tuple[int, ...]:
            return tuple(2 * c + (1 if u == v else 0) for u, c in enumerate(base))

        fixed = individualise(v0)
        target = _canonical(graph, fixed)[0]
        orbit = sum(1 for w in pivot_class if _canonical(graph, individualise(w))[0] == target)
        total *= orbit
        current = fixed
