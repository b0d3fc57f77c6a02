"""Exact subgraph, induced-subgraph and property counts by basis evaluation."""

from __future__ import annotations

import logging
from collections.abc import Callable
from fractions import Fraction

from ..config import EngineConfig
from ..core.canonical import canonical_form
from ..core.errors import BoundExceededError
from ..core.generators import ATLAS_MAX_VERTICES, all_graphs
from ..core.graph import Graph
from ..counting.homs import HostOrientation, count_homs_dtd
from .hombasis import HomBasis
from .lattice import indsub_basis, sub_basis

logger = logging.getLogger(__name__)


def _hom_counter(host: Graph, config: EngineConfig) -> Callable[[Graph], int]:
    oriented = HostOrientation.from_graph(host)
    return lambda term: count_homs_dtd(term, oriented, config)


def evaluate_basis(basis: HomBasis, host: Graph, config: EngineConfig | None = None) -> int:
    """Dot product of the basis with hom counts into ``host``; must be an integer."""
    config = config or EngineConfig()
    return basis.evaluate_integer(_hom_counter(host, config))


def count_subs_exact(pattern: Graph, host: Graph, config: EngineConfig | None = None) -> int:
    """Number of subgraphs of ``host`` isomorphic to ``pattern``.

    Raises:
        BasisIntegrityError: If the evaluated total is not an integer
    """
    config = config or EngineConfig()
    return evaluate_basis(sub_basis(pattern, config), host, config)


def count_indsubs_exact(pattern: Graph, host: Graph, config: EngineConfig | None = None) -> int:
    """Number of induced subgraphs of ``host`` isomorphic to ``pattern``."""
    config = config or EngineConfig()
    return evaluate_basis(indsub_basis(pattern, config), host, config)


def property_basis(
    predicate: Callable[[Graph], bool], k: int, config: EngineConfig | None = None
) -> HomBasis:
    """Sum of the induced-subgraph bases of every ``k``-vertex graph satisfying ``predicate``.

    Raises:
        BoundExceededError: If ``k`` is beyond the small-graph catalogue
    """
    config = config or EngineConfig()
    if k > ATLAS_MAX_VERTICES:
        raise BoundExceededError("property pattern size", k, ATLAS_MAX_VERTICES)
    pieces: list[tuple[str, Graph, Fraction]] = []
    accepted = 0
    for graph in all_graphs(k):
        if not predicate(graph):
            continue
        accepted += 1
        basis = indsub_basis(graph, config)
        pieces.extend((label, basis.graphs[label], basis.terms[label]) for label in basis)
    logger.debug(f"property basis: {accepted} of {len(all_graphs(k))} graphs on {k} vertices")
    return HomBasis.collect(pieces)


def count_property_exact(
    predicate: Callable[[Graph], bool], k: int, host: Graph, config: EngineConfig | None = None
) -> int:
    """Number of ``k``-vertex subsets of ``host`` whose induced subgraph satisfies ``predicate``."""
    config = config or EngineConfig()
    return evaluate_basis(property_basis(predicate, k, config), host, config)


def property_coefficient(
    predicate: Callable[[Graph], bool], k: int, graph: Graph, config: EngineConfig | None = None
) -> Fraction:
    """Coefficient of ``graph`` in :func:`property_basis`."""
    config = config or EngineConfig()
    return property_basis(predicate, k, config).coefficient(canonical_form(graph, config=config))
