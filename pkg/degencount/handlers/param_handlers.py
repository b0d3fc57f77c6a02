"""Structural parameter and classification subcommands."""

from __future__ import annotations

import argparse
from typing import override

from ..core.degeneracy import degeneracy
from ..core.errors import ExitCode
from ..io.report import Report
from ..params.classify import FamilyDeclaration, classify
from ..params.structure import is_edge_transitive
from .base import BaseHandler


class ClassifyHandler(BaseHandler):
    """Handler for ``classify``: exponents for one pattern, verdicts for a declared family."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        pattern = self.load(args.pattern)
        family = None
        if args.bounded is not None:
            bounded = frozenset(p.strip() for p in args.bounded.split(",") if p.strip())
            family = FamilyDeclaration(args.family or args.pattern, bounded)
        report = Report("classify")
        report.add("pattern", args.pattern)
        with report.timed("classify"):
            params = classify(pattern, self.config, family, with_taus=not args.no_taus)
        report.extend(params.as_rows())
        self.emit(report)
        return ExitCode.SUCCESS


class ParamsHandler(BaseHandler):
    """Handler for ``params``: every parameter plus a consistency check."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        pattern = self.load(args.pattern)
        report = Report("params")
        report.add("pattern", args.pattern)
        with report.timed("params"):
            params = classify(pattern, self.config, with_taus=not args.no_taus)
        report.extend(row for row in params.as_rows() if row[0] not in params.verdicts)
        report.add("degeneracy", degeneracy(pattern))
        report.add("edge_transitive", is_edge_transitive(pattern, self.config))
        return self.verdict(report, params.check())
