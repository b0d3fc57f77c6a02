"""Degeneracy ordering by repeated minimum-degree removal (bucket queue)."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class DegeneracyOrder:
    """A vertex order in which every vertex has at most ``d`` later neighbours."""

    order: tuple[int, ...]
    d: int

    def positions(self) -> list[int]:
        pos = [0] * len(self.order)
        for i, v in enumerate(self.order):
            pos[v] = i
        return pos

    def forward_neighbours(self, graph: Graph) -> list[list[int]]:
        """Neighbours of each vertex that come later in the order.

        Orienting every edge from earlier to later gives an acyclic
        orientation with out-degree at most ``d``.
        """
        pos = self.positions()
        return [sorted(w for w in graph.neighbours(v) if pos[w] > pos[v]) for v in graph.vertices]

    def max_forward_degree(self, graph: Graph) -> int:
        return max((len(f) for f in self.forward_neighbours(graph)), default=0)


def degeneracy_order(graph: Graph) -> DegeneracyOrder:
    """Compute a degeneracy ordering in O(|V| + |E|).

    Vertices are removed in order of current minimum degree. Ties follow the
    bucket's pop order, which depends only on the graph, so reruns agree.
    """
    n = graph.n
    if n == 0:
        return DegeneracyOrder((), 0)
    degree = [graph.degree(v) for v in range(n)]
    max_deg = max(degree)
    buckets: list[set[int]] = [set() for _ in range(max_deg + 1)]
    for v, deg in enumerate(degree):
        buckets[deg].add(v)
    removed = [False] * n
    order: list[int] = []
    d = 0
    low = 0
    for _ in range(n):
        while not buckets[low]:
            low += 1
        v = buckets[low].pop()
        removed[v] = True
        order.append(v)
        d = max(d, low)
        for w in graph.neighbours(v):
            if removed[w]:
                continue
            buckets[degree[w]].discard(w)
            degree[w] -= 1
            buckets[degree[w]].add(w)
            if degree[w] < low:
                low = degree[w]
    return DegeneracyOrder(tuple(order), d)


def degeneracy(graph: Graph) -> int:
    return degeneracy_order(graph).d
