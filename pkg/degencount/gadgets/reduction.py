"""Reducing colour-prescribed counts from F to a pattern H with an F-gadget.

Given an F-coloured host G, the reduction builds an H-coloured host G'
out of copies of the gadget's pieces:

- a copy of ``H[S_v]`` for each host vertex ``g`` coloured ``v``;
- a copy of ``H[P_e]`` for each host edge coloured ``e``, joined to the
  two attachment copies;
- one shared copy of ``H[R]``, joined to every copy of each of its
  neighbours.

Colour-prescribed homomorphisms from F into G and from H into G' are in
bijection, and G' stays degenerate whatever G is.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum, auto

from ..config import EngineConfig
from ..core.errors import ColouringError, GadgetError
from ..core.graph import ColouredGraph, Graph
from ..core.validation import ValidationResult
from ..counting.coloured import count_cp_homs
from .fgadget import FGadget, validate_fgadget

logger = logging.getLogger(__name__)


class CopyKind(Enum):
    """Which gadget piece a vertex of G' copies."""

    REMAINDER = auto()  # The shared copy of H[R]
    VERTEX = auto()  # A copy of H[S_v] for a host vertex
    EDGE = auto()  # A copy of H[P_e] for a host edge


@dataclass(frozen=True)
class Provenance:
    """Origin of one vertex of G': its kind, the host vertex or edge, and the H vertex."""

    kind: CopyKind
    source: tuple[int, ...]
    pattern_vertex: int


@dataclass
class ReductionResult:
    """The reduced host with everything needed to check it.

    Attributes:
        host: G' with its H-colouring
        provenance: One entry per vertex of G'
        witness_order: Remainder copies, then vertex copies, then edge copies
        claims: Verification outcome per claim name
    """

    host: ColouredGraph
    provenance: list[Provenance]
    witness_order: list[int]
    claims: dict[str, ValidationResult] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(result.ok for result in self.claims.values())


class _Builder:
    def __init__(self) -> None:
        self.colours: list[int] = []
        self.provenance: list[Provenance] = []
        self.edges: set[tuple[int, int]] = set()

    def add(self, kind: CopyKind, source: tuple[int, ...], h: int) -> int:
        self.colours.append(h)
        self.provenance.append(Provenance(kind, source, h))
        return len(self.colours) - 1

    def join(self, a: int, b: int) -> None:
        self.edges.add((a, b) if a < b else (b, a))

    def copy_block(
        self, pattern: Graph, block: frozenset[int], kind: CopyKind, source: tuple[int, ...]
    ) -> dict[int, int]:
        mapping = {h: self.add(kind, source, h) for h in sorted(block)}
        for a, b in pattern.sorted_edges():
            if a in mapping and b in mapping:
                self.join(mapping[a], mapping[b])
        return mapping


def _check_inputs(base: Graph, pattern: Graph, gadget: FGadget, coloured: ColouredGraph) -> None:
    result = validate_fgadget(base, pattern, gadget)
    if not result.ok:
        raise GadgetError(f"invalid gadget (condition {result.condition}): {result.message}")
    coloured.require_homomorphism_to(base)
    if not coloured.is_surjective(base.vertices):
        missing = sorted(set(base.vertices) - coloured.used_colours())
        raise ColouringError(f"colouring is not surjective; colours {missing} are unused")


def reduce_cphom(
    base: Graph,
    pattern: Graph,
    gadget: FGadget,
    coloured: ColouredGraph,
    verify_counts: bool = False,
    config: EngineConfig | None = None,
) -> ReductionResult:
    """Build the H-coloured host G' from an F-coloured host.

    Args:
        base: The graph F
        pattern: The graph H
        gadget: An F-gadget of H
        coloured: F-coloured host G
        verify_counts: Also compare both colour-prescribed counts
        config: Engine settings for the count comparison

    Raises:
        GadgetError: If the gadget is invalid
        ColouringError: If the colouring is not a surjective homomorphism to F
    """
    _check_inputs(base, pattern, gadget, coloured)
    host = coloured.graph
    build = _Builder()
    shared = build.copy_block(pattern, gadget.remainder, CopyKind.REMAINDER, ())
    vertex_copies: list[dict[int, int]] = []
    for g in host.vertices:
        v = coloured.colours[g]
        vertex_copies.append(build.copy_block(pattern, gadget.blocks[v], CopyKind.VERTEX, (g,)))
    for a, b in host.sorted_edges():
        g, g2 = (a, b) if coloured.colours[a] < coloured.colours[b] else (b, a)
        e = (coloured.colours[g], coloured.colours[g2])
        piece = gadget.paths[e]
        copy = build.copy_block(pattern, piece.vertices, CopyKind.EDGE, (g, g2))
        near_u = gadget.path_neighbour(pattern, e, piece.end_u)
        near_v = gadget.path_neighbour(pattern, e, piece.end_v)
        build.join(vertex_copies[g][piece.end_u], copy[near_u])
        build.join(vertex_copies[g2][piece.end_v], copy[near_v])
    copies_of: dict[int, list[int]] = {}
    for x, p in enumerate(build.provenance):
        copies_of.setdefault(p.pattern_vertex, []).append(x)
    for r in sorted(gadget.remainder):
        for h in pattern.neighbours(r):
            if h in gadget.remainder:
                continue
            for x in copies_of.get(h, ()):
                build.join(shared[r], x)
    reduced = ColouredGraph(Graph.from_edges(len(build.colours), build.edges), tuple(build.colours))
    rank = {CopyKind.REMAINDER: 0, CopyKind.VERTEX: 1, CopyKind.EDGE: 2}
    order = sorted(range(len(build.provenance)), key=lambda x: (rank[build.provenance[x].kind], x))
    result = ReductionResult(reduced, build.provenance, order)
    result.claims = check_claims(base, pattern, coloured, result, verify_counts, config)
    logger.debug(
        f"reduced |V(G)|={host.n} to |V(G')|={reduced.n}, |E(G')|={reduced.graph.edge_count}"
    )
    return result


def back_degree(graph: Graph, order: list[int]) -> int:
    """Largest number of neighbours a vertex has earlier in ``order``."""
    position = {v: i for i, v in enumerate(order)}
    return max(
        (sum(1 for w in graph.neighbours(v) if position[w] < position[v]) for v in order),
        default=0,
    )


def check_claims(
    base: Graph,
    pattern: Graph,
    coloured: ColouredGraph,
    result: ReductionResult,
    verify_counts: bool = False,
    config: EngineConfig | None = None,
) -> dict[str, ValidationResult]:
    """Check the colouring, the degeneracy bound and, optionally, count preservation."""
    claims: dict[str, ValidationResult] = {}
    reduced = result.host
    if reduced.is_homomorphism_to(pattern):
        claims["colouring"] = ValidationResult.passed()
    else:
        claims["colouring"] = ValidationResult.failed(
            "colouring", "G' colouring is not a homomorphism to H"
        )
    bound = pattern.n + 2
    degree = back_degree(reduced.graph, result.witness_order)
    if degree <= bound:
        claims["degeneracy"] = ValidationResult.passed()
    else:
        claims["degeneracy"] = ValidationResult.failed(
            "degeneracy", f"witness order has back-degree {degree} > {bound}", degree
        )
    if verify_counts:
        before = count_cp_homs(base, coloured, config)
        after = count_cp_homs(pattern, reduced, config)
        if before == after:
            claims["counts"] = ValidationResult.passed()
        else:
            claims["counts"] = ValidationResult.failed(
                "counts", f"cpHom(F, G) = {before} but cpHom(H, G') = {after}", before, after
            )
    return claims
