"""Colour-prescribed reduction subcommand."""

from __future__ import annotations

import argparse
from typing import override

from ..core.errors import ExitCode
from ..core.graph import ColouredGraph
from ..gadgets.reduction import reduce_cphom
from ..io.formats import read_colouring, read_gadget, write_reduction
from ..io.report import Report
from .base import BaseHandler


class ReduceHandler(BaseHandler):
    """Handler for ``reduce cphom``: build G' from an F-coloured host and an F-gadget of H."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        base = self.load(args.base)
        pattern = self.load(args.pattern)
        gadget = read_gadget(args.gadget)
        host = self.load(args.host)
        coloured = ColouredGraph(host, read_colouring(args.colouring, host.n))
        report = Report("reduce cphom")
        report.add("host_vertices", host.n)
        report.add("host_edges", host.edge_count)
        with report.timed("reduce"):
            result = reduce_cphom(
                base, pattern, gadget, coloured, args.verify_counts, self.config
            )
        report.add("reduced_vertices", result.host.n)
        report.add("reduced_edges", result.host.graph.edge_count)
        for name, claim in result.claims.items():
            report.add(f"claim_{name}", claim.ok)
            if not claim.ok:
                report.add(f"claim_{name}_message", claim.message)
        if args.output:
            report.add("written", [str(p) for p in write_reduction(result, args.output)])
        self.emit(report)
        return ExitCode.SUCCESS if result.ok else ExitCode.VALIDATION_FAILURE
