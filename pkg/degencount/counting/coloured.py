"""Colour-prescribed, colourful and colour-respecting homomorphism counts."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from itertools import combinations
from typing import Literal

from ..config import EngineConfig
from ..core.canonical import automorphism_count
from ..core.errors import BasisIntegrityError, ColouringError
from ..core.graph import ColouredGraph, Graph
from ..core.transforms import remove_colour_classes
from .homs import count_homs_dtd

logger = logging.getLogger(__name__)

CpMethod = Literal["filter", "inclusion-exclusion"]


def _colour_filter(pattern_colours: Sequence[int], host: ColouredGraph) -> list[frozenset[int]]:
    classes = host.colour_classes()
    return [frozenset(classes.get(c, ())) for c in pattern_colours]


def count_cf_homs(
    pattern: Graph, host: ColouredGraph, config: EngineConfig | None = None
) -> int:
    """Colourful homomorphisms: images hit every colour class exactly once.

    Computed by inclusion-exclusion over removed colour classes.

    Raises:
        ColouringError: If the host colouring is not a homomorphism to ``pattern``
    """
    host.require_homomorphism_to(pattern)
    config = config or EngineConfig()
    total = 0
    for size in range(pattern.n + 1):
        sign = -1 if size % 2 else 1
        for removed in combinations(range(pattern.n), size):
            rest = remove_colour_classes(host, removed)
            total += sign * count_homs_dtd(pattern, rest.graph, config)
    return total


def count_cp_homs(
    pattern: Graph,
    host: ColouredGraph,
    config: EngineConfig | None = None,
    method: CpMethod = "filter",
) -> int:
    """Homomorphisms ``phi`` with ``c(phi(v)) = v`` for every pattern vertex ``v``.

    ``method="filter"`` restricts each pattern vertex to its own colour class
    during the decomposition enumeration. ``method="inclusion-exclusion"``
    divides the colourful count by ``|Aut(pattern)|``.

    Raises:
        ColouringError: If the host colouring is not a homomorphism to ``pattern``
        BasisIntegrityError: If the colourful count is not divisible by the automorphisms
    """
    host.require_homomorphism_to(pattern)
    config = config or EngineConfig()
    if method == "filter":
        allowed = _colour_filter(range(pattern.n), host)
        return count_homs_dtd(pattern, host.graph, config, allowed=allowed)
    colourful = count_cf_homs(pattern, host, config)
    auts = automorphism_count(pattern, config=config)
    count, rest = divmod(colourful, auts)
    if rest:
        raise BasisIntegrityError(f"colourful count {colourful} not divisible by |Aut| = {auts}")
    return count


def count_colour_respecting_homs(
    pattern: Graph,
    pattern_colours: Sequence[int],
    host: ColouredGraph,
    config: EngineConfig | None = None,
) -> int:
    """Homomorphisms that keep each pattern vertex's colour.

    Raises:
        ColouringError: If the pattern colouring has the wrong length
    """
    if len(pattern_colours) != pattern.n:
        raise ColouringError(
            f"pattern colouring has {len(pattern_colours)} entries for {pattern.n} vertices"
        )
    allowed = _colour_filter(pattern_colours, host)
    return count_homs_dtd(pattern, host.graph, config, allowed=allowed)
