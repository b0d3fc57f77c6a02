"""Decomposition subcommands: build, validate and construct from parse trees or gadgets."""

from __future__ import annotations

import argparse
from typing import override
from pathlib import Path

from ..core.errors import DegenCountError, ExitCode
from ..dtd.decomposition import DagTreeDecomposition, validate_dtd
from ..dtd.gadget_dtd import dtd_from_fgadget, fgadget_width_bound
from ..dtd.kernel import find_kernel
from ..dtd.oriented import OrientedGraph
from ..dtd.parse_tree import dtd_from_clique_parse, skeleton_parse_tree
from ..dtd.skeleton import skeleton
from ..dtd.tree_decomposition import tree_decomposition_of
from ..dtd.treewidth import best_dtd, dag_treewidth
from ..io.formats import format_dtd, read_dtd, read_gadget, read_parse_tree
from ..io.report import Report
from .base import BaseHandler


class DtdHandler(BaseHandler):
    """Handler for ``dtd {build,validate,from-parse,from-gadget}``."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        pattern = self.load(args.pattern)
        dag = self.orient(pattern, args.order)
        report = Report(f"dtd {args.action}")
        report.add("pattern", args.pattern)
        report.add("arcs", [f"{u}>{v}" for u, v in dag.arc_list()])
        if args.action == "validate":
            return self.validate(args, dag, report)
        with report.timed("construct"):
            dtd = self._construct(args, dag, report)
        self._describe(report, dtd)
        if args.output:
            Path(args.output).write_text(format_dtd(dtd), encoding="utf-8")
            report.add("written", args.output)
        self.emit(report)
        return ExitCode.SUCCESS

    def validate(self, args: argparse.Namespace, dag: OrientedGraph, report: Report) -> int:
        if args.dtd is None:
            raise DegenCountError("validation needs --dtd")
        dtd = read_dtd(args.dtd)
        report.add("width", dtd.width)
        return self.verdict(report, validate_dtd(dag, dtd))

    def _construct(
        self, args: argparse.Namespace, dag: OrientedGraph, report: Report
    ) -> DagTreeDecomposition:
        if args.action == "build":
            report.add("kernel", find_kernel(dag))
            if args.optimal:
                width, dtd = dag_treewidth(dag, self.config)
                report.add("dag_treewidth", width)
                return dtd
            return best_dtd(dag, self.config)
        if args.action == "from-parse":
            skel = skeleton(dag)
            if args.parse_tree:
                tree = read_parse_tree(args.parse_tree)
            else:
                tree = skeleton_parse_tree(skel)
            report.add("labels", tree.label_count)
            return dtd_from_clique_parse(skel, tree)
        if args.gadget is None:
            raise DegenCountError("from-gadget needs --gadget")
        gadget = read_gadget(args.gadget)
        td = tree_decomposition_of(gadget.base)
        report.add("base_treewidth", td.width)
        report.add("width_bound", fgadget_width_bound(dag, gadget, td))
        return dtd_from_fgadget(dag, gadget, td)

    def _describe(self, report: Report, dtd: DagTreeDecomposition) -> None:
        report.add("width", dtd.width)
        report.add("nodes", len(dtd))
        for i, (bag, parent) in enumerate(zip(dtd.bags, dtd.parents, strict=True)):
            report.add(f"bag_{i}", f"parent {parent}: {' '.join(map(str, sorted(bag)))}".rstrip())
