"""Dag tree decompositions assembled from an F-gadget and a tree decomposition of F."""

from __future__ import annotations

import logging

from ..core.errors import DecompositionError, GadgetError
from ..gadgets.fgadget import FGadget, validate_fgadget
from .decomposition import DagTreeDecomposition, validate_dtd
from .oriented import OrientedGraph
from .tree_decomposition import TreeDecomposition, validate_tree_decomposition

logger = logging.getLogger(__name__)


def fgadget_width_bound(dag: OrientedGraph, gadget: FGadget, td: TreeDecomposition) -> int:
    """``r + s * (w + 1)^2`` with ``r`` local sources of R, ``s`` the most in any block."""
    r = len(dag.local_sources(gadget.remainder))
    blocks = [*gadget.blocks, *(p.vertices for p in gadget.paths.values())]
    s = max((len(dag.local_sources(b)) for b in blocks), default=0)
    return r + s * (td.width + 1) ** 2


def dtd_from_fgadget(
    dag: OrientedGraph, gadget: FGadget, td: TreeDecomposition
) -> DagTreeDecomposition:
    """One bag per node ``t`` of ``td``: local sources of R plus those of every block inside ``t``.

    A block is inside ``t`` when its base vertex is in ``t`` or, for an edge
    block, when both base endpoints are.

    Raises:
        GadgetError: If the gadget is not valid for the oriented pattern
        DecompositionError: If ``td`` is not a tree decomposition of the base graph
    """
    check = validate_fgadget(gadget.base, dag.base, gadget)
    if not check.ok:
        raise GadgetError(f"invalid gadget (condition {check.condition}): {check.message}")
    td_check = validate_tree_decomposition(gadget.base, td)
    if not td_check.ok:
        raise DecompositionError(f"invalid tree decomposition: {td_check.message}")
    shared = dag.local_sources(gadget.remainder)
    vertex_sources = [dag.local_sources(block) for block in gadget.blocks]
    edge_sources = {e: dag.local_sources(p.vertices) for e, p in gadget.paths.items()}
    bags: list[frozenset[int]] = []
    for t in td.bags:
        bag = set(shared)
        for v in t:
            bag |= vertex_sources[v]
        for (u, v), srcs in edge_sources.items():
            if u in t and v in t:
                bag |= srcs
        bags.append(frozenset(bag))
    dtd = DagTreeDecomposition(tuple(bags), td.parents)
    result = validate_dtd(dag, dtd)
    if not result.ok:
        raise DecompositionError(f"constructed decomposition is invalid: {result.message}")
    logger.debug(
        f"gadget decomposition width {dtd.width}, bound {fgadget_width_bound(dag, gadget, td)}"
    )
    return dtd
