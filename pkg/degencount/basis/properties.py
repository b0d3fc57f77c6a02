"""Named graph properties for property-counting queries."""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass

import networkx as nx

from ..core.generators import to_networkx
from ..core.graph import Graph

Predicate = Callable[[Graph], bool]


@dataclass(frozen=True)
class GraphProperty:
    """A predicate on graphs with its closure flag.

    Attributes:
        name: Registry key
        predicate: The test itself
        minor_closed: Whether every minor of a graph with the property has it too
    """

    name: str
    predicate: Predicate
    minor_closed: bool

    def __call__(self, graph: Graph) -> bool:
        return self.predicate(graph)


def _is_planar(graph: Graph) -> bool:
    planar, _ = nx.check_planarity(to_networkx(graph))
    return bool(planar)


def _is_claw_free(graph: Graph) -> bool:
    for v in graph.vertices:
        nbrs = sorted(graph.neighbours(v))
        for i, a in enumerate(nbrs):
            for j in range(i + 1, len(nbrs)):
                b = nbrs[j]
                if graph.has_edge(a, b):
                    continue
                if any(
                    not graph.has_edge(a, c) and not graph.has_edge(b, c) for c in nbrs[j + 1 :]
                ):
                    return False
    return True


def _is_acyclic(graph: Graph) -> bool:
    return graph.edge_count == graph.n - len(graph.connected_components())


BUILTIN_PROPERTIES: dict[str, GraphProperty] = {
    p.name: p
    for p in (
        GraphProperty("connected", lambda g: g.is_connected(), minor_closed=False),
        GraphProperty("planar", _is_planar, minor_closed=True),
        GraphProperty("independent-set", lambda g: g.edge_count == 0, minor_closed=True),
        GraphProperty("claw-free", _is_claw_free, minor_closed=False),
        GraphProperty("acyclic", _is_acyclic, minor_closed=True),
        GraphProperty("true", lambda g: True, minor_closed=True),
        GraphProperty("false", lambda g: False, minor_closed=True),
    )
}


class PropertyRegistry:
    """Registry of graph properties, looked up by case-insensitive name."""

    def __init__(self) -> None:
        self._properties: dict[str, GraphProperty] = {}
        self._register_all()

    def _register_all(self) -> None:
        self._properties.update(BUILTIN_PROPERTIES)

    def get(self, name: str) -> GraphProperty | None:
        return self._properties.get(name.lower())

    def exists(self, name: str) -> bool:
        return name.lower() in self._properties

    def register(self, prop: GraphProperty) -> None:
        self._properties[prop.name.lower()] = prop

    def list_all(self) -> list[str]:
        return sorted(self._properties)

    def __contains__(self, name: str) -> bool:
        return self.exists(name)


PROPERTIES = PropertyRegistry()
