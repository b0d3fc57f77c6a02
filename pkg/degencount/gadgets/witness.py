"""Minor models and induced-minor witness structures."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import isqrt

from ..core.errors import WitnessError
from ..core.generators import grid, grid_vertex
from ..core.graph import Graph
from ..core.validation import ValidationResult


@dataclass(frozen=True)
class MinorWitness:
    """One block of host vertices per minor vertex.

    Attributes:
        blocks: ``blocks[u]`` is ``B_u``
        induced: Whether non-adjacent minor vertices must have no edge between their blocks
    """

    blocks: tuple[frozenset[int], ...]
    induced: bool = True

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], induced: bool = True) -> MinorWitness:
        return cls(tuple(frozenset(b) for b in blocks), induced)

    def __len__(self) -> int:
        return len(self.blocks)

    def owner(self) -> dict[int, int]:
        return {h: u for u, block in enumerate(self.blocks) for h in block}


def validate_witness(minor: Graph, host: Graph, witness: MinorWitness) -> ValidationResult:
    """Check that ``witness`` is a model (or, if induced, a witness structure) of ``minor``.

    Conditions reported: ``count``, ``empty``, ``range``, ``disjoint``,
    ``connected``, ``edge`` (a minor edge without a host edge), ``induced``
    (a host edge between blocks of non-adjacent minor vertices).
    """
    if len(witness.blocks) != minor.n:
        return ValidationResult.failed(
            "count", f"{len(witness.blocks)} blocks for {minor.n} minor vertices"
        )
    seen: set[int] = set()
    for u, block in enumerate(witness.blocks):
        if not block:
            return ValidationResult.failed("empty", f"block {u} is empty", u)
        if any(h < 0 or h >= host.n for h in block):
            return ValidationResult.failed("range", f"block {u} names a vertex outside the host", u)
        if block & seen:
            return ValidationResult.failed("disjoint", f"block {u} overlaps an earlier block", u)
        seen |= block
        if not host.is_connected_subset(block):
            return ValidationResult.failed("connected", f"block {u} is not connected", u)
    owner = witness.owner()
    touching: set[tuple[int, int]] = set()
    for a, b in host.edges:
        if a in owner and b in owner and owner[a] != owner[b]:
            x, y = owner[a], owner[b]
            touching.add((x, y) if x < y else (y, x))
    for u, v in minor.sorted_edges():
        if (u, v) not in touching:
            return ValidationResult.failed(
                "edge", f"no host edge between blocks {u} and {v}", (u, v)
            )
    if witness.induced:
        for u, v in sorted(touching):
            if not minor.has_edge(u, v):
                return ValidationResult.failed(
                    "induced", f"host edge between blocks of non-adjacent {u} and {v}", (u, v)
                )
    return ValidationResult.passed()


def require_witness(minor: Graph, host: Graph, witness: MinorWitness) -> None:
    result = validate_witness(minor, host, witness)
    if not result.ok:
        raise WitnessError(f"invalid witness (condition {result.condition}): {result.message}")


def grid_side(witness: MinorWitness) -> int:
    """Side length ``k`` of a grid witness with ``k * k`` blocks."""
    k = isqrt(len(witness.blocks))
    if k * k != len(witness.blocks):
        raise WitnessError(f"{len(witness.blocks)} blocks do not form a square grid")
    return k


def identity_grid_model(k: int) -> MinorWitness:
    """Singleton blocks: the grid as an induced minor of itself."""
    return MinorWitness(tuple(frozenset({v}) for v in grid(k).vertices))


def even_block_model(k: int) -> MinorWitness:
    """The ``k`` grid inside the ``2k`` grid, each cell a 2-by-2 square."""
    side = 2 * k
    return MinorWitness(
        tuple(
            frozenset(
                grid_vertex(side, 2 * i + di, 2 * j + dj) for di in (0, 1) for dj in (0, 1)
            )
            for i in range(k)
            for j in range(k)
        )
    )
