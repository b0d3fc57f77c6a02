"""Exact structural parameters of pattern-sized graphs."""

from __future__ import annotations

import networkx as nx

from ..config import EngineConfig
from ..core.canonical import canonical_form
from ..core.errors import BoundExceededError
from ..core.generators import to_networkx
from ..core.graph import Graph


def _check(graph: Graph, config: EngineConfig) -> None:
    if graph.n > config.small_graph_bound:
        raise BoundExceededError("parameter search vertex count", graph.n, config.small_graph_bound)


def _max_clique_size(graph: nx.Graph) -> int:
    if graph.number_of_nodes() == 0:
        return 0
    _, size = nx.max_weight_clique(graph, weight=None)
    return int(size)


def independence_number(graph: Graph, config: EngineConfig | None = None) -> int:
    """Largest edgeless vertex set, as a maximum clique of the complement."""
    config = config or EngineConfig()
    _check(graph, config)
    return _max_clique_size(nx.complement(to_networkx(graph)))


def vertex_cover_number(graph: Graph, config: EngineConfig | None = None) -> int:
    return graph.n - independence_number(graph, config)


def induced_matching_number(graph: Graph, config: EngineConfig | None = None) -> int:
    """Largest set of edges with no shared endpoint and no edge between any two of them.

    Two edges conflict exactly when they are within distance one in the
    line graph, so this is the independence number of the squared line
    graph.
    """
    config = config or EngineConfig()
    _check(graph, config)
    if graph.edge_count == 0:
        return 0
    squared = nx.power(nx.line_graph(to_networkx(graph)), 2)
    return _max_clique_size(nx.complement(squared))


def is_edge_transitive(graph: Graph, config: EngineConfig | None = None) -> bool:
    """Whether deleting any one edge always leaves the same graph up to isomorphism."""
    config = config or EngineConfig()
    _check(graph, config)
    forms = {canonical_form(graph.remove_edge(u, v), config=config) for u, v in graph.edges}
    return len(forms) <= 1
