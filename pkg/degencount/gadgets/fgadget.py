"""F-gadgets: partitions of a pattern into vertex blocks, edge paths and a remainder.

A pattern ``H`` has an F-gadget when its vertices split into a connected
block ``S_v`` per vertex of ``F``, a nonempty block ``P_e`` per edge
``e = {u, v}`` of ``F`` that together with attachment vertices in ``S_u``
and ``S_v`` induces a path, and a remainder ``R``. Every edge of ``H``
must lie inside a block, on one of those paths, or touch ``R``.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from ..core.errors import GadgetError
from ..core.graph import Edge, Graph
from ..core.transforms import subdivide, subdivision_vertices
from ..core.validation import ValidationResult


@dataclass(frozen=True)
class GadgetPath:
    """Edge block ``P_e`` with its attachment vertices in ``S_u`` and ``S_v`` (``u < v``)."""

    vertices: frozenset[int]
    end_u: int
    end_v: int

    def with_ends(self) -> frozenset[int]:
        return self.vertices | {self.end_u, self.end_v}


@dataclass(frozen=True)
class FGadget:
    """An F-gadget of some pattern.

    Attributes:
        base: The graph ``F``
        blocks: ``blocks[v]`` is ``S_v`` for each vertex ``v`` of ``F``
        paths: Path block for each edge of ``F``, keyed by ``(u, v)`` with ``u < v``
        remainder: The set ``R`` (may be empty)
    """

    base: Graph
    blocks: tuple[frozenset[int], ...]
    paths: Mapping[Edge, GadgetPath] = field(default_factory=dict)
    remainder: frozenset[int] = frozenset()

    def block_owner(self) -> dict[int, tuple[str, object]]:
        """Map each pattern vertex to ``("S", v)``, ``("P", e)`` or ``("R", None)``."""
        owner: dict[int, tuple[str, object]] = {}
        for v, block in enumerate(self.blocks):
            for h in block:
                owner[h] = ("S", v)
        for e, p in self.paths.items():
            for h in p.vertices:
                owner[h] = ("P", e)
        for h in self.remainder:
            owner[h] = ("R", None)
        return owner

    def path_neighbour(self, pattern: Graph, e: Edge, endpoint: int) -> int:
        """The unique vertex of ``P_e`` adjacent to an attachment vertex."""
        p = self.paths[e]
        inside = [h for h in pattern.neighbours(endpoint) if h in p.vertices]
        if len(inside) != 1:
            raise GadgetError(f"attachment {endpoint} has {len(inside)} neighbours in P_{e}")
        return inside[0]


def _is_path_between(pattern: Graph, vertices: frozenset[int], a: int, b: int) -> bool:
    """Check ``pattern[vertices]`` is a simple path with endpoints ``a`` and ``b``."""
    sub_edges = [(u, v) for u, v in pattern.edges if u in vertices and v in vertices]
    if len(sub_edges) != len(vertices) - 1 or not pattern.is_connected_subset(vertices):
        return False
    degree = {v: 0 for v in vertices}
    for u, v in sub_edges:
        degree[u] += 1
        degree[v] += 1
    if a == b:
        return len(vertices) == 1
    return degree[a] == 1 and degree[b] == 1 and all(
        d == 2 for v, d in degree.items() if v not in (a, b)
    )


def validate_fgadget(base: Graph, pattern: Graph, gadget: FGadget) -> ValidationResult:
    """Check that ``gadget`` is an F-gadget of ``pattern`` for ``F = base``.

    Conditions reported: ``partition``, ``1`` (blocks nonempty and
    connected), ``2`` (edge blocks induce attachment paths), ``3`` (every
    edge is covered).
    """
    if gadget.base != base:
        return ValidationResult.failed("partition", "gadget is over a different base graph")
    if len(gadget.blocks) != base.n:
        return ValidationResult.failed(
            "partition", f"{len(gadget.blocks)} vertex blocks for {base.n} base vertices"
        )
    if set(gadget.paths) != set(base.edges):
        return ValidationResult.failed("partition", "edge blocks do not match the base edges")
    seen: set[int] = set()
    parts = [*gadget.blocks, *(p.vertices for p in gadget.paths.values()), gadget.remainder]
    for part in parts:
        if part & seen:
            return ValidationResult.failed(
                "partition", "blocks overlap", min(part & seen)
            )
        seen |= part
    if seen != set(pattern.vertices):
        return ValidationResult.failed("partition", "blocks do not cover the pattern exactly")
    for v, block in enumerate(gadget.blocks):
        if not block:
            return ValidationResult.failed("1", f"S_{v} is empty", v)
        if not pattern.is_connected_subset(block):
            return ValidationResult.failed("1", f"S_{v} does not induce a connected graph", v)
    for (u, v), p in sorted(gadget.paths.items()):
        if not p.vertices:
            return ValidationResult.failed("2", f"P_({u}, {v}) is empty", (u, v))
        if p.end_u not in gadget.blocks[u] or p.end_v not in gadget.blocks[v]:
            return ValidationResult.failed(
                "2", f"attachments of P_({u}, {v}) are not in S_{u} and S_{v}", (u, v)
            )
        if not _is_path_between(pattern, p.with_ends(), p.end_u, p.end_v):
            return ValidationResult.failed(
                "2", f"P_({u}, {v}) with its attachments is not an induced path", (u, v)
            )
    block_of: dict[int, int] = {h: v for v, block in enumerate(gadget.blocks) for h in block}
    for a, b in pattern.sorted_edges():
        if a in gadget.remainder or b in gadget.remainder:
            continue
        if a in block_of and b in block_of and block_of[a] == block_of[b]:
            continue
        if any(a in p.with_ends() and b in p.with_ends() for p in gadget.paths.values()):
            continue
        return ValidationResult.failed("3", f"edge ({a}, {b}) is not covered", (a, b))
    return ValidationResult.passed()


def require_fgadget(base: Graph, pattern: Graph, gadget: FGadget) -> None:
    result = validate_fgadget(base, pattern, gadget)
    if not result.ok:
        raise GadgetError(f"invalid gadget (condition {result.condition}): {result.message}")


def fgadget_from_subdivision(base: Graph, times: int = 1) -> tuple[Graph, FGadget]:
    """Subdivide every edge of ``base`` and return the pattern with its natural gadget."""
    pattern = subdivide(base, times)
    internal = subdivision_vertices(base, times)
    gadget = FGadget(
        base,
        tuple(frozenset({v}) for v in base.vertices),
        {e: GadgetPath(frozenset(internal[e]), e[0], e[1]) for e in base.sorted_edges()},
    )
    return pattern, gadget


def fgadget_cliques_on_vertices(base: Graph, clique_size: int) -> tuple[Graph, FGadget]:
    """Replace each base vertex by a clique and each edge by a subdivided edge.

    Vertex ``v`` becomes the clique on ``v*c .. v*c+c-1``; the subdivision
    vertex of each edge joins the first vertex of both cliques.
    """
    if clique_size < 1:
        raise GadgetError(f"clique size must be positive, got {clique_size}")
    c = clique_size
    edges: list[tuple[int, int]] = []
    blocks: list[frozenset[int]] = []
    for v in base.vertices:
        members = list(range(v * c, v * c + c))
        blocks.append(frozenset(members))
        edges.extend((a, b) for i, a in enumerate(members) for b in members[i + 1 :])
    nxt = base.n * c
    paths: dict[Edge, GadgetPath] = {}
    for u, v in base.sorted_edges():
        edges.extend([(u * c, nxt), (nxt, v * c)])
        paths[(u, v)] = GadgetPath(frozenset({nxt}), u * c, v * c)
        nxt += 1
    return Graph.from_edges(nxt, edges), FGadget(base, tuple(blocks), paths)
