"""Standard graph families, small-graph enumeration and random degenerate hosts."""

from __future__ import annotations

from collections.abc import Sequence
from functools import cache

import networkx as nx
import numpy as np

from .errors import GraphError
from .graph import Graph

ATLAS_MAX_VERTICES = 7


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise GraphError(message)


def independent_set(k: int) -> Graph:
    _require(k >= 0, f"independent_set needs k >= 0, got {k}")
    return Graph(k)


def clique(k: int) -> Graph:
    _require(k >= 1, f"clique needs k >= 1, got {k}")
    return Graph.from_edges(k, ((u, v) for u in range(k) for v in range(u + 1, k)))


def path(k: int) -> Graph:
    """Path on ``k`` vertices."""
    _require(k >= 1, f"path needs k >= 1, got {k}")
    return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    _require(k >= 3, f"cycle needs k >= 3, got {k}")
    return Graph.from_edges(k, ((i, (i + 1) % k) for i in range(k)))


def matching(k: int) -> Graph:
    """``k`` disjoint edges ``(2i, 2i+1)``."""
    _require(k >= 1, f"matching needs k >= 1, got {k}")
    return Graph.from_edges(2 * k, ((2 * i, 2 * i + 1) for i in range(k)))


def biclique(a: int, b: int) -> Graph:
    """Complete bipartite graph; left side ``0..a-1``, right side ``a..a+b-1``."""
    _require(a >= 1 and b >= 1, f"biclique needs a, b >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def grid(k: int) -> Graph:
    """The k-by-k grid; cell ``(i, j)`` is vertex ``i * k + j``."""
    _require(k >= 1, f"grid needs k >= 1, got {k}")
    edges: list[tuple[int, int]] = []
    for i in range(k):
        for j in range(k):
            v = i * k + j
            if j + 1 < k:
                edges.append((v, v + 1))
            if i + 1 < k:
                edges.append((v, v + k))
    return Graph.from_edges(k * k, edges)


def grid_vertex(k: int, i: int, j: int) -> int:
    return i * k + j


def grid_coordinates(k: int, v: int) -> tuple[int, int]:
    return divmod(v, k)


def wreath(k: int, sizes: Sequence[int] | None = None) -> Graph:
    """Wreath graph: classes ``V_0..V_{k-1}`` with all edges between ``V_i`` and ``V_{i+1 mod k}``.

    Classes are numbered consecutively. With every class of size one this is
    the cycle ``C_k``.
    """
    _require(k >= 3, f"wreath needs k >= 3, got {k}")
    sizes = list(sizes) if sizes is not None else [1] * k
    _require(len(sizes) == k, f"wreath needs {k} class sizes, got {len(sizes)}")
    _require(all(s >= 1 for s in sizes), "wreath class sizes must be positive")
    starts = [0]
    for s in sizes:
        starts.append(starts[-1] + s)
    classes = [range(starts[i], starts[i + 1]) for i in range(k)]
    edges = [
        (u, v) for i in range(k) for u in classes[i] for v in classes[(i + 1) % k]
    ]
    return Graph.from_edges(starts[-1], edges)


def from_networkx(g: nx.Graph) -> Graph:
    """Convert a networkx graph, renumbering nodes in sorted order."""
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return Graph.from_edges(len(nodes), ((index[u], index[v]) for u, v in g.edges()))


def to_networkx(graph: Graph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(graph.vertices)
    g.add_edges_from(graph.edges)
    return g


@cache
def _atlas_by_size() -> dict[int, tuple[Graph, ...]]:
    grouped: dict[int, list[Graph]] = {}
    for g in nx.graph_atlas_g():
        grouped.setdefault(g.number_of_nodes(), []).append(from_networkx(g))
    return {k: tuple(v) for k, v in grouped.items()}


def all_graphs(k: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of graphs on ``k`` vertices."""
    _require(0 <= k <= ATLAS_MAX_VERTICES, f"all_graphs supports 0..{ATLAS_MAX_VERTICES}, got {k}")
    return _atlas_by_size()[k]


def all_graphs_up_to(k: int) -> list[Graph]:
    return [g for size in range(1, k + 1) for g in all_graphs(size)]


def random_degenerate(n: int, d: int, rng: np.random.Generator) -> Graph:
    """Random graph with degeneracy at most ``d``.

    Vertex ``v`` joins ``min(v, d)`` distinct earlier vertices chosen
    uniformly, so the reverse vertex order witnesses the bound.
    """
    _require(n >= 0 and d >= 0, "random_degenerate needs n, d >= 0")
    edges: list[tuple[int, int]] = []
    for v in range(1, n):
        picks = rng.choice(v, size=min(v, d), replace=False)
        edges.extend((int(u), v) for u in picks)
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, rng: np.random.Generator) -> Graph:
    """Erdos-Renyi G(n, p) sampled edge by edge in lexicographic order."""
    draws = rng.random(n * (n - 1) // 2)
    edges: list[tuple[int, int]] = []
    idx = 0
    for u in range(n):
        for v in range(u + 1, n):
            if draws[idx] < p:
                edges.append((u, v))
            idx += 1
    return Graph.from_edges(n, edges)
