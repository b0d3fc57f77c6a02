"""Skeletons: the bipartite source-to-joint reachability dag."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from .oriented import Arc, OrientedGraph


@dataclass(frozen=True)
class Skeleton:
    """Bipartite dag with an arc ``(s, v)`` whenever joint ``v`` is reachable from source ``s``.

    Vertex ids are those of the oriented graph it was built from.
    """

    sources: tuple[int, ...]
    joints: tuple[int, ...]
    arcs: frozenset[Arc]
    _out: dict[int, frozenset[int]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        out: dict[int, set[int]] = {v: set() for v in (*self.sources, *self.joints)}
        for s, v in self.arcs:
            out[s].add(v)
        object.__setattr__(self, "_out", {v: frozenset(o) for v, o in out.items()})

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.sources) | frozenset(self.joints)

    def out_neighbours(self, v: int) -> frozenset[int]:
        return self._out.get(v, frozenset())

    def closure(self, bag: Iterable[int]) -> frozenset[int]:
        acc: set[int] = set()
        for b in bag:
            acc.add(b)
            acc |= self._out.get(b, frozenset())
        return frozenset(acc)

    def undirected_edges(self) -> frozenset[tuple[int, int]]:
        return frozenset((min(s, v), max(s, v)) for s, v in self.arcs)


def skeleton(dag: OrientedGraph) -> Skeleton:
    """Keep the sources and joints of ``dag``; join each source to the joints it reaches."""
    joints = dag.joints
    arcs = frozenset((s, v) for s in dag.sources for v in dag.reach(s) if v in joints)
    return Skeleton(tuple(dag.sources), tuple(sorted(joints)), arcs)
