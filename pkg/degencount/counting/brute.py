"""Exhaustive oracles: enumerate every map (or vertex subset) and count directly."""

from __future__ import annotations

from collections.abc import Callable, Collection, Sequence
from itertools import combinations
from math import comb

from ..config import EngineConfig
from ..core.canonical import automorphism_count, canonical_form
from ..core.errors import BoundExceededError
from ..core.graph import Graph


def _check_budget(pattern: Graph, host: Graph, config: EngineConfig) -> None:
    size = host.n**pattern.n
    if size > config.brute_budget:
        raise BoundExceededError("brute-force map count", size, config.brute_budget)


def _backtrack(
    pattern: Graph,
    host: Graph,
    injective: bool,
    allowed: Sequence[Collection[int]] | None,
) -> int:
    k = pattern.n
    earlier = [[u for u in pattern.neighbours(v) if u < v] for v in range(k)]
    phi = [0] * k
    used = [False] * host.n

    def extend(v: int) -> int:
        if v == k:
            return 1
        total = 0
        candidates = allowed[v] if allowed is not None else range(host.n)
        for g in candidates:
            if injective and used[g]:
                continue
            if all(host.has_edge(phi[u], g) for u in earlier[v]):
                phi[v] = g
                used[g] = True
                total += extend(v + 1)
                used[g] = False
        return total

    return extend(0)


def count_homs_brute(
    pattern: Graph,
    host: Graph,
    config: EngineConfig | None = None,
    allowed: Sequence[Collection[int]] | None = None,
) -> int:
    """Count homomorphisms by trying every map, optionally restricted per pattern vertex.

    Raises:
        BoundExceededError: If ``|V(host)|^|V(pattern)|`` exceeds the brute-force budget
    """
    _check_budget(pattern, host, config or EngineConfig())
    return _backtrack(pattern, host, False, allowed)


def count_embeddings_brute(pattern: Graph, host: Graph, config: EngineConfig | None = None) -> int:
    _check_budget(pattern, host, config or EngineConfig())
    return _backtrack(pattern, host, True, None)


def count_subs_brute(pattern: Graph, host: Graph, config: EngineConfig | None = None) -> int:
    """Subgraph copies: injective homomorphisms divided by automorphisms."""
    return count_embeddings_brute(pattern, host, config) // automorphism_count(pattern)


def _subsets_budget(host: Graph, k: int, config: EngineConfig) -> None:
    size = comb(host.n, k)
    if size > config.brute_budget:
        raise BoundExceededError("brute-force subset count", size, config.brute_budget)


def count_indsubs_brute(pattern: Graph, host: Graph, config: EngineConfig | None = None) -> int:
    """Induced copies: vertex subsets whose induced subgraph is isomorphic to ``pattern``."""
    config = config or EngineConfig()
    _subsets_budget(host, pattern.n, config)
    target = canonical_form(pattern, config=config)
    edges = pattern.edge_count
    total = 0
    for subset in combinations(range(host.n), pattern.n):
        sub, _ = host.induced_subgraph(subset)
        if sub.edge_count == edges and canonical_form(sub, config=config) == target:
            total += 1
    return total


def count_property_brute(
    predicate: Callable[[Graph], bool], k: int, host: Graph, config: EngineConfig | None = None
) -> int:
    """Number of ``k``-vertex subsets whose induced subgraph satisfies ``predicate``."""
    config = config or EngineConfig()
    _subsets_budget(host, k, config)
    return sum(
        1
        for subset in combinations(range(host.n), k)
        if predicate(host.induced_subgraph(subset)[0])
    )
