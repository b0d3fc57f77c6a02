"""Colourful decision procedures on vertex-coloured degenerate hosts.

All three detectors take a host coloured with ``0..k-1`` (every colour
used) and decide whether some ``k``-vertex structure meets each colour
exactly once.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import permutations, product

from ..config import EngineConfig
from ..core.degeneracy import degeneracy_order
from ..core.errors import ColouringError, DegenCountError
from ..core.graph import ColouredGraph, Graph
from ..counting.coloured import count_colour_respecting_homs
from ..counting.homs import HostOrientation
from ..dtd.kernel import find_kernel
from ..dtd.oriented import OrientedGraph, orientations
from ..params.structure import induced_matching_number

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Detection:
    """Outcome of a colourful detector.

    Attributes:
        found: Whether a colourful structure exists
        witness: Host vertices of one such structure, when the detector builds one
        branch: Which case of the procedure answered
    """

    found: bool
    witness: tuple[int, ...] | None = None
    branch: str = ""

    def __bool__(self) -> bool:
        return self.found


def _require_palette(coloured: ColouredGraph, k: int) -> None:
    used = coloured.used_colours()
    if not used <= set(range(k)):
        raise ColouringError(f"colours must lie in 0..{k - 1}")
    if len(used) != k:
        missing = sorted(set(range(k)) - used)
        raise ColouringError(f"colouring is not surjective; colours {missing} are unused")


def is_colourful_independent(graph: Graph, colours: Sequence[int], chosen: Sequence[int]) -> bool:
    if len({colours[v] for v in chosen}) != len(chosen):
        return False
    return graph.is_independent(chosen)


class _IndependentSetSearch:
    """Recursive multicoloured independent set search over a fixed host."""

    def __init__(self, coloured: ColouredGraph) -> None:
        self.graph = coloured.graph
        self.colours = coloured.colours
        order = degeneracy_order(self.graph)
        self.d = order.d
        self.position = order.positions()
        self.greedy_used = False

    def closed(self, v: int) -> set[int]:
        return {v, *self.graph.neighbours(v)}

    def greedy(self, alive: set[int], palette: set[int]) -> dict[int, int]:
        """Take the earliest live vertex, drop its colour class and neighbourhood, repeat."""
        picked: dict[int, int] = {}
        rest = set(alive)
        while palette:
            v = min(rest, key=self.position.__getitem__)
            c = self.colours[v]
            picked[c] = v
            palette.discard(c)
            rest -= self.closed(v)
            rest = {w for w in rest if self.colours[w] != c}
        if not is_colourful_independent(self.graph, self.colours, list(picked.values())):
            raise DegenCountError(f"greedy branch produced an invalid witness {picked}")
        self.greedy_used = True
        return picked

    def search(self, alive: frozenset[int], palette: tuple[int, ...]) -> dict[int, int] | None:
        if not palette:
            return {}
        classes = {c: sorted(v for v in alive if self.colours[v] == c) for c in palette}
        if any(not members for members in classes.values()):
            return None
        limit = self.d * (len(palette) - 1)
        small = sorted(
            (c for c in palette if len(classes[c]) <= limit), key=lambda c: (len(classes[c]), c)
        )
        if not small:
            return self.greedy(set(alive), set(palette))
        rest_palette = tuple(c for c in palette if c not in small)
        dropped = set().union(*(classes[c] for c in small))
        for combo in product(*(classes[c] for c in small)):
            if not self.graph.is_independent(combo):
                continue
            chosen = dict(zip(small, combo, strict=True))
            if not rest_palette:
                return chosen
            removed = set(dropped)
            for v in combo:
                removed |= self.closed(v)
            found = self.search(alive - removed, rest_palette)
            if found is not None:
                return {**chosen, **found}
        return None


def detect_multicol_is(coloured: ColouredGraph, k: int | None = None) -> Detection:
    """Decide whether the host has an independent set meeting every colour once.

    When every colour class has more than ``d(k-1)`` vertices the answer is
    YES and a witness is built greedily along the degeneracy order.
    Otherwise all choices from the small classes are tried and the search
    recurses on what their closed neighbourhoods leave.

    Returns:
        Detection whose witness lists the chosen vertex of each colour in colour order

    Raises:
        ColouringError: If the colouring does not use exactly the colours ``0..k-1``
    """
    k = len(coloured.used_colours()) if k is None else k
    _require_palette(coloured, k)
    search = _IndependentSetSearch(coloured)
    found = search.search(frozenset(coloured.graph.vertices), tuple(range(k)))
    if found is None:
        return Detection(False, branch="enumerate")
    branch = "greedy" if search.greedy_used else "enumerate"
    return Detection(True, tuple(found[c] for c in range(k)), branch)


def detect_multicol_sub(
    pattern: Graph, coloured: ColouredGraph, config: EngineConfig | None = None
) -> Detection:
    """Decide whether some colourful subgraph copy of ``pattern`` exists.

    Each bijection from pattern vertices to colours is tried in turn; a
    colour-respecting homomorphism under a bijection is injective.
    """
    config = config or EngineConfig()
    k = pattern.n
    _require_palette(coloured, k)
    for assignment in permutations(range(k)):
        if count_colour_respecting_homs(pattern, assignment, coloured, config) > 0:
            return Detection(True, branch="bijection")
    return Detection(False, branch="bijection")


class _StrongEmbeddingSearch:
    """Colourful induced copies of one orientation of the pattern."""

    def __init__(
        self,
        dag: OrientedGraph,
        host: HostOrientation,
        in_sets: Sequence[frozenset[int]],
        colours: tuple[int, ...],
    ) -> None:
        self.dag = dag
        self.host = host
        self.in_sets = in_sets
        self.colours = colours
        kernel = find_kernel(dag)
        self.kernel = kernel
        self.outside = [s for s in dag.sources if s not in kernel]
        reached = dag.closure(kernel)
        self.core = [v for v in dag.topological_order if v in reached]

    def core_images(self) -> Iterator[dict[int, int]]:
        """Homomorphisms of the kernel's reach with pairwise distinct colours."""
        phi: dict[int, int] = {}
        used: set[int] = set()
        inside = set(self.core)

        def candidates(u: int) -> Sequence[int]:
            if u in self.kernel:
                return range(self.host.n)
            anchor = next(w for w in self.dag.in_neighbours(u) if w in inside)
            return self.host.out[phi[anchor]]

        def extend(i: int) -> Iterator[dict[int, int]]:
            if i == len(self.core):
                yield dict(phi)
                return
            u = self.core[i]
            preds = [w for w in self.dag.in_neighbours(u) if w in inside]
            for x in candidates(u):
                if self.colours[x] in used:
                    continue
                if not all(x in self.host.out_sets[phi[w]] for w in preds):
                    continue
                phi[u] = x
                used.add(self.colours[x])
                yield from extend(i + 1)
                used.discard(self.colours[x])
                del phi[u]

        yield from extend(0)

    def is_induced(self, phi: dict[int, int]) -> bool:
        graph = self.host.graph
        core = self.core
        for i, a in enumerate(core):
            for b in core[i + 1 :]:
                if not self.dag.base.has_edge(a, b) and graph.has_edge(phi[a], phi[b]):
                    return False
        return True

    def extend_outside(self, phi: dict[int, int], k: int) -> dict[int, int] | None:
        """Place the non-kernel sources through a multicoloured independent set."""
        if not self.outside:
            return phi
        image = set(phi.values())
        free = sorted(set(range(k)) - {self.colours[x] for x in image})
        targets = [frozenset(phi[w] for w in self.dag.out_neighbours(s)) for s in self.outside]
        for palette in permutations(free):
            blocks: list[list[int]] = []
            for c, target in zip(palette, targets, strict=True):
                block = [
                    v
                    for v in range(self.host.n)
                    if self.colours[v] == c
                    and self.host.out_sets[v] & image == target
                    and not self.in_sets[v] & image
                ]
                if not block:
                    break
                blocks.append(block)
            else:
                members = [v for block in blocks for v in block]
                sub, order = self.host.graph.induced_subgraph(members)
                local = {v: i for i, block in enumerate(blocks) for v in block}
                reduced = ColouredGraph(sub, tuple(local[v] for v in order))
                result = detect_multicol_is(reduced, len(blocks))
                if result.found and result.witness is not None:
                    placed = dict(phi)
                    for i, s in enumerate(self.outside):
                        placed[s] = order[result.witness[i]]
                    return placed
        return None


def detect_multicol_indsub(
    pattern: Graph, coloured: ColouredGraph, config: EngineConfig | None = None
) -> Detection:
    """Decide whether some colourful induced copy of ``pattern`` exists.

    An edgeless pattern is the independent set problem. Otherwise, for
    every acyclic orientation, the part reachable from a small kernel is
    enumerated directly and the remaining sources, which form an
    independent set, are found with :func:`detect_multicol_is` among the
    host vertices whose arcs into the partial image match theirs exactly.

    Returns:
        Detection whose witness lists the image of each pattern vertex
    """
    config = config or EngineConfig()
    k = pattern.n
    _require_palette(coloured, k)
    if induced_matching_number(pattern, config) == 0:
        result = detect_multicol_is(coloured, k)
        return Detection(result.found, result.witness, "independent-set")
    host = HostOrientation.from_graph(coloured.graph)
    incoming: list[set[int]] = [set() for _ in range(host.n)]
    for v, outs in enumerate(host.out):
        for w in outs:
            incoming[w].add(v)
    in_sets = [frozenset(s) for s in incoming]
    for dag in orientations(pattern):
        search = _StrongEmbeddingSearch(dag, host, in_sets, coloured.colours)
        for phi in search.core_images():
            if not search.is_induced(phi):
                continue
            placed = search.extend_outside(phi, k)
            if placed is not None:
                return Detection(True, tuple(placed[v] for v in range(k)), "kernel")
    logger.debug(f"no colourful induced copy of a {k}-vertex pattern in |V|={coloured.n}")
    return Detection(False, branch="kernel")
