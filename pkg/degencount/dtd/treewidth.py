"""Exhaustive dag treewidth and the tau parameters of small patterns."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations

from ..config import EngineConfig
from ..core.canonical import canonical_form, canonical_graph
from ..core.errors import BoundExceededError
from ..core.graph import Graph, set_partitions
from ..core.transforms import has_self_loop, quotient
from .decomposition import DagTreeDecomposition
from .kernel import kernel_dtd
from .oriented import OrientedGraph, orientations

logger = logging.getLogger(__name__)


def _candidates(dag: OrientedGraph, width: int) -> list[tuple[frozenset[int], tuple[int, ...]]]:
    """Distinct closures of bags with at most ``width`` vertices, each with its smallest bag."""
    seen: dict[frozenset[int], tuple[int, ...]] = {}
    for size in range(1, width + 1):
        for bag in combinations(range(dag.n), size):
            closure = dag.closure(bag)
            if closure not in seen:
                seen[closure] = bag
    return list(seen.items())


def _search(dag: OrientedGraph, width: int) -> DagTreeDecomposition | None:
    """Look for a decomposition of the given width.

    Nodes are added in running-intersection order: each new closure must
    add an uncovered vertex, and its overlap with what is already covered
    must sit inside a single earlier closure, which becomes its parent.
    Member sets that cannot be completed are memoised.
    """
    candidates = _candidates(dag, width)
    everything = dag.vertex_set
    first = min(dag.sources)
    failed: set[frozenset[int]] = set()
    members: list[int] = []
    parents: list[int] = []

    def grow(covered: frozenset[int]) -> bool:
        if covered == everything:
            return True
        key = frozenset(members)
        if key in failed:
            return False
        for idx, (closure, _) in enumerate(candidates):
            if closure <= covered or idx in key:
                continue
            overlap = closure & covered
            attach = next(
                (pos for pos, m in enumerate(members) if overlap <= candidates[m][0]), None
            )
            if attach is None:
                continue
            members.append(idx)
            parents.append(attach)
            if grow(covered | closure):
                return True
            members.pop()
            parents.pop()
        failed.add(key)
        return False

    for idx, (closure, _) in enumerate(candidates):
        if first not in closure:
            continue
        members[:] = [idx]
        parents[:] = [-1]
        if grow(closure):
            return DagTreeDecomposition(
                tuple(frozenset(candidates[m][1]) for m in members), tuple(parents)
            )
    return None


def dag_treewidth(
    dag: OrientedGraph, config: EngineConfig | None = None
) -> tuple[int, DagTreeDecomposition]:
    """Minimum width over all dag tree decompositions, with a witness.

    Widths below the kernel decomposition's width are searched exhaustively;
    if none succeeds the kernel decomposition is optimal.

    Raises:
        BoundExceededError: If the dag has more than ``dtw_vertex_bound`` vertices
    """
    config = config or EngineConfig()
    if dag.n > config.dtw_vertex_bound:
        raise BoundExceededError("dag treewidth vertex count", dag.n, config.dtw_vertex_bound)
    fallback = kernel_dtd(dag)
    for width in range(1, fallback.width):
        found = _search(dag, width)
        if found is not None:
            logger.debug(f"dag treewidth {width} below kernel width {fallback.width}")
            return width, found
    return fallback.width, fallback


def best_dtd(dag: OrientedGraph, config: EngineConfig | None = None) -> DagTreeDecomposition:
    """Decomposition chosen by the configured strategy (kernel or optimal)."""
    config = config or EngineConfig()
    if config.dtd_strategy == "optimal" and dag.n <= config.dtw_vertex_bound:
        return dag_treewidth(dag, config)[1]
    return kernel_dtd(dag)


def _check(graph: Graph, config: EngineConfig) -> None:
    if graph.n > config.dtw_vertex_bound:
        raise BoundExceededError("tau vertex count", graph.n, config.dtw_vertex_bound)


@lru_cache(maxsize=4096)
def _tau1_canonical(graph: Graph, config: EngineConfig) -> int:
    if graph.n == 0:
        return 0
    return max(dag_treewidth(dag, config)[0] for dag in orientations(graph))


def tau1(graph: Graph, config: EngineConfig | None = None) -> int:
    """Maximum dag treewidth over the acyclic orientations of ``graph``."""
    config = config or EngineConfig()
    _check(graph, config)
    return _tau1_canonical(canonical_graph(graph, config), config)


def _loop_free_quotients(graph: Graph, config: EngineConfig) -> Iterator[Graph]:
    if graph.n > config.partition_bound:
        raise BoundExceededError(
            "partition enumeration vertex count", graph.n, config.partition_bound
        )
    for partition in set_partitions(graph.n):
        if not has_self_loop(graph, partition):
            yield quotient(graph, partition)


def quotient_classes(graph: Graph, config: EngineConfig | None = None) -> dict[str, Graph]:
    """One representative per isomorphism class of self-loop-free quotients."""
    config = config or EngineConfig()
    classes: dict[str, Graph] = {}
    for q in _loop_free_quotients(graph, config):
        classes.setdefault(canonical_form(q, config=config), q)
    return classes


def supergraph_classes(graph: Graph, config: EngineConfig | None = None) -> dict[str, Graph]:
    """One representative per isomorphism class of edge-supergraphs on the same vertices."""
    config = config or EngineConfig()
    classes: dict[str, Graph] = {canonical_form(graph, config=config): graph}
    frontier = [graph]
    while frontier:
        grown: list[Graph] = []
        for g in frontier:
            for u, v in g.non_edges():
                bigger = g.add_edges([(u, v)])
                label = canonical_form(bigger, config=config)
                if label not in classes:
                    classes[label] = bigger
                    grown.append(bigger)
        frontier = grown
    return classes


def tau2(graph: Graph, config: EngineConfig | None = None) -> int:
    """Maximum of :func:`tau1` over self-loop-free quotients."""
    config = config or EngineConfig()
    _check(graph, config)
    return max(tau1(q, config) for q in quotient_classes(graph, config).values())


def tau3(graph: Graph, config: EngineConfig | None = None) -> int:
    """Maximum of :func:`tau2` over edge-supergraphs.

    Every supergraph of a loop-free quotient of ``graph`` is a loop-free
    quotient of some supergraph and vice versa, so this scans the
    supergraph classes of each quotient class.
    """
    config = config or EngineConfig()
    _check(graph, config)
    classes: dict[str, Graph] = {}
    for q in quotient_classes(graph, config).values():
        classes.update(supergraph_classes(q, config))
    return max(tau1(g, config) for g in classes.values())
