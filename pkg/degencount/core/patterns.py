"""Inline pattern specifications such as ``clique:3`` or ``subdiv:grid:2:1``."""

from __future__ import annotations

from collections.abc import Callable

from . import generators
from .errors import GraphError
from .graph import Graph
from .transforms import subdivide

PatternBuilder = Callable[[list[int]], Graph]


def _ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise GraphError(f"bad pattern parameters {text!r}") from exc


def _one(name: str, fn: Callable[[int], Graph]) -> PatternBuilder:
    def build(args: list[int]) -> Graph:
        if len(args) != 1:
            raise GraphError(f"{name} takes one parameter, got {len(args)}")
        return fn(args[0])

    return build


def _biclique(args: list[int]) -> Graph:
    if len(args) != 2:
        raise GraphError(f"biclique takes two parameters, got {len(args)}")
    return generators.biclique(args[0], args[1])


BUILTIN_PATTERNS: dict[str, PatternBuilder] = {
    "clique": _one("clique", generators.clique),
    "path": _one("path", generators.path),
    "cycle": _one("cycle", generators.cycle),
    "matching": _one("matching", generators.matching),
    "is": _one("is", generators.independent_set),
    "grid": _one("grid", generators.grid),
    "biclique": _biclique,
}


class PatternRegistry:
    """Registry of named pattern families.

    Specs have the form ``name:params`` with comma-separated integer
    parameters. Two forms are handled specially: ``wreath:k[:s1,...,sk]``
    and ``subdiv:SPEC:times``.
    """

    def __init__(self) -> None:
        self._builders: dict[str, PatternBuilder] = {}
        self._register_all()

    def _register_all(self) -> None:
        """Register all built-in families."""
        self._builders.update(BUILTIN_PATTERNS)

    def get(self, name: str) -> PatternBuilder | None:
        return self._builders.get(name.lower())

    def exists(self, name: str) -> bool:
        return name.lower() in self._builders or name.lower() in ("wreath", "subdiv")

    def register(self, name: str, builder: PatternBuilder) -> None:
        self._builders[name.lower()] = builder

    def list_all(self) -> list[str]:
        return sorted([*self._builders, "subdiv", "wreath"])

    def __contains__(self, name: str) -> bool:
        return self.exists(name)

    def is_spec(self, spec: str) -> bool:
        """Check if ``spec`` names a registered family (as opposed to a file path)."""
        return ":" in spec and self.exists(spec.split(":", 1)[0])

    def build(self, spec: str) -> Graph:
        """Build the graph described by ``spec``.

        Raises:
            GraphError: If the family is unknown or its parameters are invalid
        """
        name, _, rest = spec.partition(":")
        name = name.lower()
        if name == "subdiv":
            inner, sep, times = rest.rpartition(":")
            if not sep:
                raise GraphError(f"subdiv needs SPEC:times, got {rest!r}")
            count = _ints(times)
            if len(count) != 1:
                raise GraphError(f"bad subdivision count {times!r}")
            return subdivide(self.build(inner), count[0])
        if name == "wreath":
            k_text, _, sizes_text = rest.partition(":")
            k = _ints(k_text)
            if len(k) != 1:
                raise GraphError(f"wreath takes one class count, got {k_text!r}")
            return generators.wreath(k[0], _ints(sizes_text) if sizes_text else None)
        builder = self.get(name)
        if builder is None:
            raise GraphError(f"unknown pattern family {name!r}")
        return builder(_ints(rest))


# Global singleton registry
PATTERNS = PatternRegistry()
