"""Kernels: source sets from which every non-source is reachable."""

from __future__ import annotations

import logging
from collections.abc import Iterable

from ..core.errors import DecompositionError
from .decomposition import DagTreeDecomposition
from .oriented import OrientedGraph

logger = logging.getLogger(__name__)


def is_kernel(dag: OrientedGraph, kernel: Iterable[int]) -> bool:
    """Check ``kernel`` is a nonempty set of sources reaching every non-source."""
    k = frozenset(kernel)
    sources = frozenset(dag.sources)
    if not k or not k <= sources:
        return False
    return dag.vertex_set - sources <= dag.closure(k)


def find_kernel(dag: OrientedGraph) -> frozenset[int]:
    """Shrink the source set while the reachable non-sources stay the same.

    Candidates are tried smallest id first and the scan restarts after each
    drop. If nothing is left (edgeless pattern) the smallest source is
    returned.
    """
    current = set(dag.sources)
    target = dag.plus_closure(current)
    dropped = True
    while dropped:
        dropped = False
        for s in sorted(current):
            if dag.plus_closure(current - {s}) == target:
                current.discard(s)
                dropped = True
                break
    if not current:
        return frozenset({min(dag.sources)}) if dag.sources else frozenset()
    logger.debug(f"kernel {sorted(current)} from {len(dag.sources)} sources")
    return frozenset(current)


def dtd_from_kernel(dag: OrientedGraph, kernel: Iterable[int]) -> DagTreeDecomposition:
    """Root bag ``kernel`` with a singleton child per remaining source.

    Raises:
        DecompositionError: If ``kernel`` is not a kernel of ``dag``
    """
    k = frozenset(kernel)
    if dag.n == 0:
        return DagTreeDecomposition.single(())
    if not is_kernel(dag, k):
        raise DecompositionError(f"{sorted(k)} is not a kernel")
    rest = [s for s in dag.sources if s not in k]
    return DagTreeDecomposition.star(k, [{s} for s in rest])


def kernel_dtd(dag: OrientedGraph) -> DagTreeDecomposition:
    return dtd_from_kernel(dag, find_kernel(dag))
