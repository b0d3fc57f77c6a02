"""Approximate counting subcommand."""

from __future__ import annotations

import argparse
from typing import override

from ..approx.estimators import (
    ApproxResult,
    approx_count_indsubs,
    approx_count_property,
    approx_count_subs,
)
from ..core.errors import DegenCountError, ExitCode
from ..core.graph import Graph
from ..io.report import Report
from .base import BaseHandler
from .count_handlers import describe_host, lookup_property


class ApproxHandler(BaseHandler):
    """Handler for ``approx {sub,indsub,property}``."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        host = self.load(args.host)
        report = Report(f"approx {args.problem}")
        describe_host(report, host)
        with report.timed("approx"):
            result = self._estimate(args, host, report)
        report.extend(result.as_rows())
        self.emit(report)
        return ExitCode.SUCCESS

    def _estimate(self, args: argparse.Namespace, host: Graph, report: Report) -> ApproxResult:
        if args.problem == "property":
            if args.property is None or args.size is None:
                raise DegenCountError("approx property needs --property and --size")
            prop = lookup_property(args.property)
            report.add("property", prop.name)
            report.add("size", args.size)
            return approx_count_property(
                prop,
                args.size,
                host,
                args.eps,
                args.seed,
                threshold=args.threshold,
                config=self.config,
                samples=args.samples,
            )
        if args.pattern is None:
            raise DegenCountError(f"approx {args.problem} needs --pattern")
        pattern = self.load(args.pattern)
        report.add("pattern", args.pattern)
        estimate = approx_count_subs if args.problem == "sub" else approx_count_indsubs
        return estimate(
            pattern,
            host,
            args.eps,
            args.seed,
            self.config,
            samples_per_group=args.samples_per_group,
        )
