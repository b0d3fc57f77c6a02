"""Base protocol and handler class for subcommand handlers."""

from __future__ import annotations

import argparse
from typing import Protocol

from ..config import EngineConfig
from ..core.errors import ExitCode
from ..core.graph import Graph
from ..core.validation import ValidationResult
from ..dtd.oriented import OrientedGraph, orient_by_order
from ..io.formats import resolve_graph
from ..io.report import Report


class RunContext(Protocol):
    """What handlers can access from the running application.

    This keeps handlers independent of argument parsing and output streams.
    """

    config: EngineConfig

    def emit(self, report: Report) -> None:
        """Queue a finished report for output."""
        ...


class BaseHandler:
    """Base class for all handlers providing common functionality."""

    def __init__(self, ctx: RunContext) -> None:
        self._ctx = ctx

    @property
    def config(self) -> EngineConfig:
        """Engine settings for this run."""
        return self._ctx.config

    def emit(self, report: Report) -> None:
        self._ctx.emit(report)

    def load(self, spec: str) -> Graph:
        """Inline pattern spec or edge-list path."""
        return resolve_graph(spec)

    def orient(self, graph: Graph, order: list[int] | None) -> OrientedGraph:
        """Orientation from ``--order``, defaulting to the identity order."""
        return orient_by_order(graph, order if order is not None else list(graph.vertices))

    def verdict(self, report: Report, result: ValidationResult) -> int:
        """Record a validation result and pick the exit code it implies."""
        report.add("valid", result.ok)
        if not result.ok:
            report.add("condition", result.condition)
            report.add("message", result.message)
            if result.witness:
                report.add("witness", result.witness)
        self.emit(report)
        return ExitCode.SUCCESS if result.ok else ExitCode.VALIDATION_FAILURE

    def run(self, args: argparse.Namespace) -> int:
        """Execute the subcommand and return its exit code."""
        raise NotImplementedError
