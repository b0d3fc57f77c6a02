"""Planting a subdivided F inside a quotient or an edge-supergraph of a pattern."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..core.errors import GadgetError
from ..core.graph import Edge, Graph, VertexPartition, normalise_edge
from ..core.transforms import quotient, subdivide, subdivision_vertices
from .fgadget import FGadget, GadgetPath, require_fgadget


def _planted_gadget(base: Graph, host: Graph, placement: Sequence[int]) -> FGadget:
    """Gadget of ``host`` when ``placement[x]`` hosts vertex ``x`` of the subdivided base."""
    internal = subdivision_vertices(base)
    blocks = tuple(frozenset({placement[v]}) for v in base.vertices)
    paths = {
        e: GadgetPath(frozenset({placement[internal[e][0]]}), placement[e[0]], placement[e[1]])
        for e in base.sorted_edges()
    }
    remainder = frozenset(set(host.vertices) - set(placement))
    gadget = FGadget(base, blocks, paths, remainder)
    require_fgadget(base, host, gadget)
    return gadget


def is_induced_matching(pattern: Graph, matching: Iterable[Edge]) -> bool:
    edges = [normalise_edge(u, v) for u, v in matching]
    ends = [x for e in edges for x in e]
    if len(set(ends)) != len(ends) or not all(pattern.has_edge(u, v) for u, v in edges):
        return False
    owner = {x: i for i, e in enumerate(edges) for x in e}
    return not any(
        owner[a] != owner[b] for a, b in pattern.edges if a in owner and b in owner
    )


def quotient_with_grid_gadget(
    pattern: Graph, base: Graph, matching: Sequence[Edge]
) -> tuple[VertexPartition, FGadget]:
    """Partition merging matching endpoints so the quotient contains the 1-subdivision of ``base``.

    Each edge ``(v, e)`` of the subdivision takes its own matching edge,
    whose endpoints join the blocks of ``v`` and ``e``. An isolated base
    vertex takes one endpoint of a spare matching edge. Every other vertex
    stays a singleton. Since the matching is induced, no block spans an
    edge, and the subdivided base is induced on the merged blocks.

    Returns:
        The partition and an F-gadget of the quotient

    Raises:
        GadgetError: If the matching is not induced or too small
    """
    if not is_induced_matching(pattern, matching):
        raise GadgetError("vertex set is not an induced matching")
    subdivided = subdivide(base)
    isolated = [v for v in base.vertices if base.degree(v) == 0]
    needed = subdivided.edge_count + len(isolated)
    if len(matching) < needed:
        raise GadgetError(f"matching has {len(matching)} edges, need {needed}")
    members: list[set[int]] = [set() for _ in subdivided.vertices]
    spare = iter(sorted(normalise_edge(u, v) for u, v in matching))
    for x, y in subdivided.sorted_edges():
        a, b = next(spare)
        members[x].add(a)
        members[y].add(b)
    for v in isolated:
        members[v].add(next(spare)[0])
    used = set().union(*members)
    blocks = [frozenset(m) for m in members]
    blocks.extend(frozenset({h}) for h in pattern.vertices if h not in used)
    partition = VertexPartition(pattern.n, tuple(blocks))
    merged = quotient(pattern, partition)
    owner = partition.block_of()
    placement = [owner[min(m)] for m in members]
    return partition, _planted_gadget(base, merged, placement)


def supergraph_with_grid_gadget(
    pattern: Graph, base: Graph, independent: Sequence[int]
) -> tuple[list[Edge], FGadget]:
    """Edges to add so the 1-subdivision of ``base`` appears induced on an independent set.

    Returns:
        The added edges and an F-gadget of the enlarged pattern

    Raises:
        GadgetError: If the set is not independent or too small
    """
    chosen = sorted(set(independent))
    if not pattern.is_independent(chosen):
        raise GadgetError("vertex set is not independent")
    subdivided = subdivide(base)
    if len(chosen) < subdivided.n:
        raise GadgetError(f"independent set has {len(chosen)} vertices, need {subdivided.n}")
    placement = chosen[: subdivided.n]
    added = sorted(normalise_edge(placement[x], placement[y]) for x, y in subdivided.edges)
    enlarged = pattern.add_edges(added)
    return added, _planted_gadget(base, enlarged, placement)
