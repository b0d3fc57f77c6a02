"""Translations between induced grid minors and grid F-gadgets.

An induced ``2k`` grid minor yields a gadget over the ``k`` grid: even
cells become vertex blocks and each odd cell between two of them supplies
a connecting path. Conversely, a gadget over F together with a grid model
in F yields an induced grid minor of the pattern.
"""

from __future__ import annotations

import logging
from collections import deque
from collections.abc import Iterable

from ..core.errors import GadgetError, WitnessError
from ..core.generators import grid, grid_vertex
from ..core.graph import Edge, Graph
from .fgadget import FGadget, GadgetPath, require_fgadget
from .witness import MinorWitness, grid_side, require_witness, validate_witness

logger = logging.getLogger(__name__)


def _single_neighbour(pattern: Graph, x: int, block: frozenset[int]) -> int | None:
    inside = [y for y in pattern.neighbours(x) if y in block]
    return inside[0] if len(inside) == 1 else None


def connecting_path(
    pattern: Graph, middle: frozenset[int], left: frozenset[int], right: frozenset[int]
) -> tuple[list[int], int, int]:
    """Shortest path through ``middle`` from ``left`` to ``right``.

    The first path vertex has exactly one neighbour in ``left`` and the
    last exactly one in ``right``; no other path vertex touches either
    block. Being shortest, the path is induced.

    Returns:
        The path vertices and the attachment vertices in ``left`` and ``right``

    Raises:
        GadgetError: If no such path exists
    """
    near_left = {x for x in middle if any(y in left for y in pattern.neighbours(x))}
    near_right = {x for x in middle if any(y in right for y in pattern.neighbours(x))}
    starts = sorted(x for x in near_left if _single_neighbour(pattern, x, left) is not None)
    parent: dict[int, int] = {}
    seen = set(starts)
    queue = deque(starts)
    while queue:
        x = queue.popleft()
        if x in near_right:
            attach_right = _single_neighbour(pattern, x, right)
            if attach_right is None:
                continue
            path = [x]
            while path[-1] in parent:
                path.append(parent[path[-1]])
            path.reverse()
            attach_left = _single_neighbour(pattern, path[0], left)
            if attach_left is None:
                raise GadgetError(f"path start {path[0]} lost its single attachment")
            return path, attach_left, attach_right
        for y in sorted(pattern.neighbours(x)):
            if y in middle and y not in seen and y not in near_left:
                seen.add(y)
                parent[y] = x
                queue.append(y)
    raise GadgetError("no induced path with single attachments through the connecting block")


def grid_fgadget_from_witness(pattern: Graph, witness: MinorWitness) -> FGadget:
    """Gadget over the ``k`` grid from an induced ``2k`` grid witness in ``pattern``.

    Raises:
        WitnessError: If the witness is not a valid induced grid witness
        GadgetError: If some odd block admits no suitable connecting path
    """
    side = grid_side(witness)
    if side % 2 or side < 2:
        raise WitnessError(f"need an even grid side, got {side}")
    if not witness.induced:
        raise WitnessError("grid gadgets need an induced witness")
    require_witness(grid(side), pattern, witness)
    k = side // 2
    base = grid(k)

    def cell(i: int, j: int) -> frozenset[int]:
        return witness.blocks[grid_vertex(side, i, j)]

    blocks = tuple(cell(2 * i, 2 * j) for i in range(k) for j in range(k))
    paths: dict[Edge, GadgetPath] = {}
    for u, v in base.sorted_edges():
        (i, j), (i2, j2) = divmod(u, k), divmod(v, k)
        middle = cell(i + i2, j + j2)
        path, end_u, end_v = connecting_path(pattern, middle, blocks[u], blocks[v])
        paths[(u, v)] = GadgetPath(frozenset(path), end_u, end_v)
    used = set().union(*blocks, *(p.vertices for p in paths.values()))
    remainder = frozenset(set(pattern.vertices) - used)
    gadget = FGadget(base, blocks, paths, remainder)
    require_fgadget(base, pattern, gadget)
    logger.debug(f"grid gadget over grid({k}) with |R|={len(remainder)}")
    return gadget


def _edges_between(base: Graph, a: frozenset[int], b: frozenset[int]) -> Iterable[Edge]:
    for u, v in base.sorted_edges():
        if (u in a and v in b) or (u in b and v in a):
            yield (u, v)


def grid_witness_from_fgadget(
    pattern: Graph, gadget: FGadget, model: MinorWitness
) -> MinorWitness:
    """Induced grid witness in ``pattern`` from a gadget and a grid model in its base graph.

    Each grid cell collects the vertex blocks of its model vertices, the
    edge paths inside the cell, and the paths of edges leading to the next
    cell right or down.

    Raises:
        WitnessError: If the model is invalid or the result fails validation
        GadgetError: If the gadget is invalid
    """
    base = gadget.base
    require_fgadget(base, pattern, gadget)
    k = grid_side(model)
    require_witness(grid(k), base, model)
    cells: list[frozenset[int]] = []
    for i in range(k):
        for j in range(k):
            own = model.blocks[grid_vertex(k, i, j)]
            members: set[int] = set()
            for v in own:
                members |= gadget.blocks[v]
            edges = list(_edges_between(base, own, own))
            if i + 1 < k:
                edges.extend(_edges_between(base, own, model.blocks[grid_vertex(k, i + 1, j)]))
            if j + 1 < k:
                edges.extend(_edges_between(base, own, model.blocks[grid_vertex(k, i, j + 1)]))
            for e in edges:
                members |= gadget.paths[e].vertices
            cells.append(frozenset(members))
    witness = MinorWitness(tuple(cells), induced=True)
    result = validate_witness(grid(k), pattern, witness)
    if not result.ok:
        raise WitnessError(
            f"constructed witness fails condition {result.condition}: {result.message}"
        )
    return witness
