"""Hom-bases for embeddings, subgraphs and induced subgraphs.

Embeddings expand over the partition lattice with its Moebius function;
quotients with self-loops contribute nothing. Induced copies expand over
edge-supergraphs with alternating signs, each supergraph then expanding
as embeddings.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..config import EngineConfig
from ..core.canonical import automorphism_count, canonical_form, canonical_graph
from ..core.errors import BoundExceededError
from ..core.graph import Graph, set_partitions
from ..core.transforms import has_self_loop, quotient
from ..counting.brute import count_embeddings_brute
from ..dtd.treewidth import supergraph_classes
from .hombasis import HomBasis

logger = logging.getLogger(__name__)


def moebius_from_bottom(block_sizes: list[int]) -> int:
    """``mu(bottom, rho)`` in the partition lattice, from the block sizes of ``rho``."""
    n = sum(block_sizes)
    value = -1 if (n - len(block_sizes)) % 2 else 1
    for size in block_sizes:
        value *= factorial(size - 1)
    return value


def _check(pattern: Graph, config: EngineConfig) -> None:
    if pattern.n > config.partition_bound:
        raise BoundExceededError("basis pattern vertex count", pattern.n, config.partition_bound)


@lru_cache(maxsize=1024)
def _emb_basis(pattern: Graph, config: EngineConfig) -> HomBasis:
    pieces: list[tuple[str, Graph, Fraction]] = []
    for partition in set_partitions(pattern.n):
        if has_self_loop(pattern, partition):
            continue
        q = quotient(pattern, partition)
        mu = moebius_from_bottom([len(b) for b in partition.blocks])
        pieces.append((canonical_form(q, config=config), q, Fraction(mu)))
    basis = HomBasis.collect(pieces)
    logger.debug(f"embedding basis for n={pattern.n}: {len(basis)} terms")
    return basis


def emb_basis(pattern: Graph, config: EngineConfig | None = None) -> HomBasis:
    """``|Emb(pattern, G)| = sum a(H') |Hom(H', G)|`` over self-loop-free quotients."""
    config = config or EngineConfig()
    _check(pattern, config)
    return _emb_basis(canonical_graph(pattern, config), config)


def sub_basis(pattern: Graph, config: EngineConfig | None = None) -> HomBasis:
    """Subgraph copies: the embedding basis divided by ``|Aut(pattern)|``."""
    config = config or EngineConfig()
    auts = automorphism_count(pattern, config=config)
    return emb_basis(pattern, config).scaled(Fraction(1, auts))


@lru_cache(maxsize=1024)
def _supergraph_multiplicities(
    pattern: Graph, config: EngineConfig
) -> tuple[tuple[str, Graph, int], ...]:
    """Each supergraph class with the number of added edge sets producing it.

    That number is the count of bijective homomorphisms into the supergraph
    divided by the supergraph's automorphisms.
    """
    own = config.with_overrides(brute_budget=max(config.brute_budget, pattern.n**pattern.n))
    result: list[tuple[str, Graph, int]] = []
    for label, bigger in sorted(supergraph_classes(pattern, config).items()):
        bijections = count_embeddings_brute(pattern, bigger, own)
        result.append((label, bigger, bijections // automorphism_count(bigger, config=config)))
    return tuple(result)


def supergraph_multiplicities(
    pattern: Graph, config: EngineConfig | None = None
) -> list[tuple[str, Graph, int]]:
    """``(label, representative, number of edge sets S with pattern + S isomorphic to it)``."""
    config = config or EngineConfig()
    _check(pattern, config)
    return list(_supergraph_multiplicities(canonical_graph(pattern, config), config))


def indsub_basis(pattern: Graph, config: EngineConfig | None = None) -> HomBasis:
    """Induced copies: strong embeddings over ``|Aut(pattern)|``.

    Strong embeddings are the alternating sum, over edge-supergraphs ``H'``,
    of the number of edge sets turning ``pattern`` into ``H'`` times the
    embeddings of ``H'``.
    """
    config = config or EngineConfig()
    _check(pattern, config)
    auts = automorphism_count(pattern, config=config)
    pieces: list[tuple[str, Graph, Fraction]] = []
    for _, bigger, multiplicity in supergraph_multiplicities(pattern, config):
        sign = -1 if (bigger.edge_count - pattern.edge_count) % 2 else 1
        weight = Fraction(sign * multiplicity, auts)
        expansion = emb_basis(bigger, config)
        pieces.extend(
            (label, expansion.graphs[label], expansion.terms[label] * weight)
            for label in expansion
        )
    return HomBasis.collect(pieces)
