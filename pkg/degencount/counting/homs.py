"""Homomorphism counting over dag tree decompositions of the pattern.

The host is oriented along a degeneracy order, so every vertex has at most
``d`` out-neighbours. For each acyclic orientation of the pattern, each
decomposition node ranges over all images of its bag and extends them to
the bag's closure through host out-neighbourhoods only. Child nodes hand up
tables keyed by the images of the vertices their closures share with the
parent's, so the pieces join without re-enumeration. The per-orientation
counts sum to the plain homomorphism count.
"""

from __future__ import annotations

import logging
import time
from collections.abc import Callable, Collection, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from ..config import EngineConfig
from ..core.degeneracy import degeneracy_order
from ..core.graph import Graph
from ..dtd.decomposition import DagTreeDecomposition
from ..dtd.oriented import OrientedGraph, orientations
from ..dtd.treewidth import best_dtd
from .tables import CountTable, Key, make_table

logger = logging.getLogger(__name__)

DtdFactory = Callable[[OrientedGraph, EngineConfig], DagTreeDecomposition]
Allowed = Sequence[Collection[int]]


@dataclass(frozen=True)
class HostOrientation:
    """A host graph oriented from earlier to later vertices of an order.

    Attributes:
        graph: The undirected host
        out: Sorted out-neighbours of each vertex
        out_sets: The same neighbourhoods as sets, for arc tests
        d: Maximum out-degree
    """

    graph: Graph
    out: tuple[tuple[int, ...], ...]
    out_sets: tuple[frozenset[int], ...] = field(repr=False)
    d: int

    @classmethod
    def from_graph(cls, graph: Graph) -> HostOrientation:
        order = degeneracy_order(graph)
        forward = order.forward_neighbours(graph)
        return cls(
            graph,
            tuple(tuple(f) for f in forward),
            tuple(frozenset(f) for f in forward),
            max((len(f) for f in forward), default=0),
        )

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass
class CountStats:
    """Bookkeeping for one :func:`count_homs_dtd_stats` call."""

    orientations: int = 0
    max_width: int = 0
    elapsed_ms: float = 0.0


@dataclass(frozen=True)
class _NodePlan:
    """How to enumerate the images of one node's closure.

    ``order`` lists the closure in topological order. ``anchors[i]`` is an
    in-neighbour of ``order[i]`` inside the closure whose image supplies the
    candidates, or -1 for a closure root; ``checks[i]`` are the remaining
    in-neighbours whose arcs must be verified.
    """

    order: tuple[int, ...]
    anchors: tuple[int, ...]
    checks: tuple[tuple[int, ...], ...]
    shared: tuple[int, ...] | None
    child_keys: tuple[tuple[int, ...], ...]


def _plan(
    dag: OrientedGraph,
    closure: frozenset[int],
    shared: tuple[int, ...] | None,
    child_keys: tuple[tuple[int, ...], ...],
) -> _NodePlan:
    order = tuple(v for v in dag.topological_order if v in closure)
    anchors: list[int] = []
    checks: list[tuple[int, ...]] = []
    for v in order:
        inside = [u for u in dag.in_neighbours(v) if u in closure]
        anchors.append(inside[0] if inside else -1)
        checks.append(tuple(inside[1:]))
    return _NodePlan(order, tuple(anchors), tuple(checks), shared, child_keys)


def _enumerate(
    plan: _NodePlan,
    host: HostOrientation,
    allowed: Allowed | None,
    first: Sequence[int],
    tables: Sequence[CountTable],
    size: int,
) -> tuple[list[tuple[Key, int]], int]:
    """Enumerate closure images whose first root maps into ``first``.

    Returns the keyed entries for the parent table, or the plain total at
    the root node.
    """
    order, anchors, checks = plan.order, plan.anchors, plan.checks
    shared, child_keys = plan.shared, plan.child_keys
    out, out_sets = host.out, host.out_sets
    m = len(order)
    phi = [0] * size
    entries: list[tuple[Key, int]] = []
    total = 0
    root_range: list[Iterable[int]] = []
    for i, v in enumerate(order):
        if i == 0:
            root_range.append(first)
        elif anchors[i] < 0:
            root_range.append(sorted(allowed[v]) if allowed is not None else range(host.n))
        else:
            root_range.append(())

    def extend(i: int) -> None:
        nonlocal total
        if i == m:
            value = 1
            for keys, table in zip(child_keys, tables, strict=True):
                value *= table.get(tuple(phi[x] for x in keys))
                if not value:
                    return
            if shared is None:
                total += value
            else:
                entries.append((tuple(phi[x] for x in shared), value))
            return
        v = order[i]
        anchor = anchors[i]
        candidates = root_range[i] if anchor < 0 else out[phi[anchor]]
        restrict = allowed[v] if allowed is not None and anchor >= 0 else None
        for g in candidates:
            if restrict is not None and g not in restrict:
                continue
            if all(g in out_sets[phi[u]] for u in checks[i]):
                phi[v] = g
                extend(i + 1)

    extend(0)
    return entries, total


def _chunks(items: Sequence[int], parts: int) -> list[Sequence[int]]:
    parts = max(1, min(parts, len(items)))
    step, extra = divmod(len(items), parts)
    result: list[Sequence[int]] = []
    start = 0
    for i in range(parts):
        end = start + step + (1 if i < extra else 0)
        result.append(items[start:end])
        start = end
    return result


def count_homs_oriented(
    dag: OrientedGraph,
    host: HostOrientation,
    dtd: DagTreeDecomposition,
    allowed: Allowed | None = None,
    config: EngineConfig | None = None,
) -> int:
    """Count homomorphisms from ``dag`` into ``host`` that map every arc onto an arc.

    Args:
        dag: Oriented pattern
        host: Oriented host
        dtd: A dag tree decomposition of ``dag`` (not re-validated here)
        allowed: Optional host vertex sets, one per pattern vertex, that the
            image of that vertex must lie in
        config: Engine settings; ``dictionary`` and ``threads`` are used
    """
    config = config or EngineConfig()
    if dag.n == 0:
        return 1
    closures = [dag.closure(bag) for bag in dtd.bags]
    tables: dict[int, CountTable] = {}
    total = 0
    for t in dtd.postorder():
        closure = closures[t]
        parent = dtd.parents[t]
        shared = None if parent < 0 else tuple(sorted(closure & closures[parent]))
        kids = dtd.children[t]
        plan = _plan(
            dag, closure, shared, tuple(tuple(sorted(closures[c] & closure)) for c in kids)
        )
        head = plan.order[0]
        first: Sequence[int] = (
            sorted(allowed[head]) if allowed is not None else range(host.n)
        )
        child_tables = [tables.pop(c) for c in kids]
        chunks = _chunks(first, config.threads)
        if len(chunks) > 1:
            with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
                results = list(
                    pool.map(
                        lambda chunk: _enumerate(plan, host, allowed, chunk, child_tables, dag.n),
                        chunks,
                    )
                )
        else:
            results = [_enumerate(plan, host, allowed, first, child_tables, dag.n)]
        if shared is None:
            total += sum(part for _, part in results)
        else:
            tables[t] = make_table(
                config.dictionary, (entry for entries, _ in results for entry in entries)
            )
    return total


def _default_dtd(dag: OrientedGraph, config: EngineConfig) -> DagTreeDecomposition:
    return best_dtd(dag, config)


def _count_connected(
    pattern: Graph,
    host: HostOrientation,
    config: EngineConfig,
    dtd_for: DtdFactory,
    allowed: Allowed | None,
    stats: CountStats,
) -> int:
    total = 0
    for dag in orientations(pattern):
        dtd = dtd_for(dag, config)
        stats.orientations += 1
        stats.max_width = max(stats.max_width, dtd.width)
        total += count_homs_oriented(dag, host, dtd, allowed, config)
    return total


def count_homs_dtd_stats(
    pattern: Graph,
    host: Graph | HostOrientation,
    config: EngineConfig | None = None,
    dtd_for: DtdFactory | None = None,
    allowed: Allowed | None = None,
) -> tuple[int, CountStats]:
    """Count ``Hom(pattern, host)`` and report how the count was obtained.

    A disconnected pattern is counted per component and the counts are
    multiplied. ``allowed`` restricts the image of each pattern vertex.
    """
    config = config or EngineConfig()
    dtd_for = dtd_for or _default_dtd
    oriented = host if isinstance(host, HostOrientation) else HostOrientation.from_graph(host)
    stats = CountStats()
    started = time.perf_counter()
    result = 1
    for component in pattern.connected_components():
        sub, order = pattern.induced_subgraph(component)
        sub_allowed = [allowed[v] for v in order] if allowed is not None else None
        result *= _count_connected(sub, oriented, config, dtd_for, sub_allowed, stats)
        if not result:
            break
    stats.elapsed_ms = (time.perf_counter() - started) * 1000.0
    logger.debug(
        f"hom count n={pattern.n} into |V|={oriented.n} (d={oriented.d}): "
        f"{stats.orientations} orientations, max width {stats.max_width}"
    )
    return result, stats


def count_homs_dtd(
    pattern: Graph,
    host: Graph | HostOrientation,
    config: EngineConfig | None = None,
    dtd_for: DtdFactory | None = None,
    allowed: Allowed | None = None,
) -> int:
    """Exact ``|Hom(pattern, host)|`` by the decomposition dynamic programme."""
    return count_homs_dtd_stats(pattern, host, config, dtd_for, allowed)[0]
