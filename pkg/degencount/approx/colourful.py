"""Exact colourful counts for one fixed vertex colouring of the host.

With ``k = |V(H)|`` colours, a homomorphism whose image meets every colour
is injective, so colourful homomorphisms are colourful embeddings. They are
counted by inclusion-exclusion over the colours the image may use, each
term a list-restricted hom count on a single host orientation.
"""

from __future__ import annotations

from collections.abc import Sequence
from itertools import combinations

from ..basis.lattice import supergraph_multiplicities
from ..config import EngineConfig
from ..core.canonical import automorphism_count
from ..core.errors import BasisIntegrityError, ColouringError
from ..core.graph import Graph
from ..counting.homs import HostOrientation, count_homs_dtd


def _orient(host: Graph | HostOrientation) -> HostOrientation:
    return host if isinstance(host, HostOrientation) else HostOrientation.from_graph(host)


def colourful_embedding_count(
    pattern: Graph,
    host: Graph | HostOrientation,
    colouring: Sequence[int],
    config: EngineConfig | None = None,
) -> int:
    """Embeddings of ``pattern`` whose image carries every colour ``0..k-1`` once.

    Raises:
        ColouringError: If the colouring does not match the host
    """
    config = config or EngineConfig()
    oriented = _orient(host)
    if len(colouring) != oriented.n:
        raise ColouringError(f"colouring has {len(colouring)} entries for {oriented.n} vertices")
    k = pattern.n
    if k == 0:
        return 1
    classes: list[list[int]] = [[] for _ in range(k)]
    for v, c in enumerate(colouring):
        if 0 <= c < k:
            classes[c].append(v)
    if any(not members for members in classes):
        return 0
    total = 0
    for size in range(1, k + 1):
        sign = -1 if (k - size) % 2 else 1
        for kept in combinations(range(k), size):
            allowed = frozenset(v for c in kept for v in classes[c])
            total += sign * count_homs_dtd(pattern, oriented, config, allowed=[allowed] * k)
    return total


def colourful_copy_count(
    pattern: Graph,
    host: Graph | HostOrientation,
    colouring: Sequence[int],
    config: EngineConfig | None = None,
) -> int:
    """Subgraph copies of ``pattern`` that are colourful under ``colouring``."""
    config = config or EngineConfig()
    embeddings = colourful_embedding_count(pattern, host, colouring, config)
    copies, rest = divmod(embeddings, automorphism_count(pattern, config=config))
    if rest:
        raise BasisIntegrityError(f"colourful embedding count {embeddings} not divisible by |Aut|")
    return copies


def colourful_induced_count(
    pattern: Graph,
    host: Graph | HostOrientation,
    colouring: Sequence[int],
    config: EngineConfig | None = None,
    supergraphs: Sequence[tuple[str, Graph, int]] | None = None,
) -> int:
    """Induced copies of ``pattern`` that are colourful under ``colouring``.

    Strong embeddings are the alternating sum over edge-supergraphs on the
    same vertex set, and that identity holds map by map, so it survives
    restricting every term to colourful maps. Pass ``supergraphs`` from
    :func:`supergraph_multiplicities` to reuse them across colourings.
    """
    config = config or EngineConfig()
    oriented = _orient(host)
    strong = 0
    if supergraphs is None:
        supergraphs = supergraph_multiplicities(pattern, config)
    for _, bigger, multiplicity in supergraphs:
        sign = -1 if (bigger.edge_count - pattern.edge_count) % 2 else 1
        embeddings = colourful_embedding_count(bigger, oriented, colouring, config)
        strong += sign * multiplicity * embeddings
    copies, rest = divmod(strong, automorphism_count(pattern, config=config))
    if rest:
        raise BasisIntegrityError(
            f"colourful strong embedding count {strong} not divisible by |Aut|"
        )
    return copies
