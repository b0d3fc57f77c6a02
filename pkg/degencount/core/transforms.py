"""Graph transformations: quotients, tensor products, subdivisions, colour-class removal."""

from __future__ import annotations

from collections.abc import Iterable

from .errors import GraphError, SelfLoopError
from .graph import ColouredGraph, Graph, VertexPartition


def quotient(graph: Graph, partition: VertexPartition) -> Graph:
    """Identify the vertices of each block; parallel edges collapse.

    Raises:
        SelfLoopError: If some block contains an edge
    """
    if partition.n != graph.n:
        raise GraphError(f"partition covers {partition.n} vertices, graph has {graph.n}")
    owner = partition.block_of()
    edges: set[tuple[int, int]] = set()
    for u, v in graph.edges:
        bu, bv = owner[u], owner[v]
        if bu == bv:
            raise SelfLoopError(partition.blocks[bu], (u, v))
        edges.add((bu, bv) if bu < bv else (bv, bu))
    return Graph(len(partition), frozenset(edges))


def has_self_loop(graph: Graph, partition: VertexPartition) -> bool:
    owner = partition.block_of()
    return any(owner[u] == owner[v] for u, v in graph.edges)


def tensor_product(g1: Graph, g2: Graph) -> Graph:
    """Categorical product; vertex ``(u1, u2)`` is numbered ``u1 * |V(g2)| + u2``."""
    n2 = g2.n
    edges: set[tuple[int, int]] = set()
    for u1, v1 in g1.edges:
        for u2, v2 in g2.edges:
            a, b = u1 * n2 + u2, v1 * n2 + v2
            edges.add((a, b) if a < b else (b, a))
            a, b = u1 * n2 + v2, v1 * n2 + u2
            edges.add((a, b) if a < b else (b, a))
    return Graph(g1.n * n2, frozenset(edges))


def subdivide(graph: Graph, times: int = 1) -> Graph:
    """Replace every edge by a path with ``times`` internal vertices.

    New vertices are appended after the originals, edge by edge in sorted
    edge order.
    """
    if times < 1:
        raise GraphError(f"subdivide needs times >= 1, got {times}")
    edges: list[tuple[int, int]] = []
    nxt = graph.n
    for u, v in graph.sorted_edges():
        chain = [u, *range(nxt, nxt + times), v]
        nxt += times
        edges.extend(zip(chain, chain[1:], strict=False))
    return Graph.from_edges(nxt, edges)


def subdivision_vertices(graph: Graph, times: int = 1) -> dict[tuple[int, int], list[int]]:
    """Map each original edge to its internal vertices in :func:`subdivide`'s numbering."""
    result: dict[tuple[int, int], list[int]] = {}
    nxt = graph.n
    for e in graph.sorted_edges():
        result[e] = list(range(nxt, nxt + times))
        nxt += times
    return result


def remove_colour_classes(coloured: ColouredGraph, removed: Iterable[int]) -> ColouredGraph:
    """Induced subgraph on vertices whose colour is not in ``removed``."""
    drop = set(removed)
    keep = [v for v, c in enumerate(coloured.colours) if c not in drop]
    sub, order = coloured.graph.induced_subgraph(keep)
    return ColouredGraph(sub, tuple(coloured.colours[v] for v in order))


def complement(graph: Graph) -> Graph:
    return Graph(graph.n, frozenset(graph.non_edges()))
