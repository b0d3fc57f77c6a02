"""Exact and brute-force counting subcommands."""

from __future__ import annotations

import argparse
from typing import override

from ..basis.exact import count_indsubs_exact, count_property_exact, count_subs_exact
from ..basis.properties import PROPERTIES, GraphProperty
from ..core.degeneracy import degeneracy
from ..core.errors import DegenCountError, ExitCode
from ..core.graph import Graph
from ..counting.brute import (
    count_homs_brute,
    count_indsubs_brute,
    count_property_brute,
    count_subs_brute,
)
from ..counting.homs import count_homs_dtd_stats
from ..io.report import Report
from .base import BaseHandler


def lookup_property(name: str) -> GraphProperty:
    prop = PROPERTIES.get(name)
    if prop is None:
        known = ", ".join(PROPERTIES.list_all())
        raise DegenCountError(f"unknown property {name!r}; known: {known}")
    return prop


def describe_host(report: Report, host: Graph) -> None:
    report.add("host_vertices", host.n)
    report.add("host_edges", host.edge_count)
    report.add("host_degeneracy", degeneracy(host))


class CountHandler(BaseHandler):
    """Handler for ``count {sub,indsub,hom,property}``."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        host = self.load(args.host)
        method = "brute" if args.brute else "exact"
        report = Report(f"count {args.problem}")
        describe_host(report, host)
        report.add("method", method)
        if args.problem == "property":
            result = self._count_property(args, host, method, report)
        else:
            pattern = self.load(args.pattern)
            report.add("pattern", args.pattern)
            report.add("pattern_vertices", pattern.n)
            with report.timed("count"):
                result = self._count_pattern(args.problem, pattern, host, method, report)
        report.add("count", result)
        self.emit(report)
        return ExitCode.SUCCESS

    def _count_pattern(
        self, problem: str, pattern: Graph, host: Graph, method: str, report: Report
    ) -> int:
        config = self.config
        if method == "brute":
            brute = {
                "hom": count_homs_brute,
                "sub": count_subs_brute,
                "indsub": count_indsubs_brute,
            }
            return brute[problem](pattern, host, config)
        if problem == "hom":
            count, stats = count_homs_dtd_stats(pattern, host, config)
            report.add("orientations", stats.orientations)
            report.add("max_width", stats.max_width)
            return count
        if problem == "sub":
            return count_subs_exact(pattern, host, config)
        return count_indsubs_exact(pattern, host, config)

    def _count_property(
        self, args: argparse.Namespace, host: Graph, method: str, report: Report
    ) -> int:
        if args.property is None or args.size is None:
            raise DegenCountError("count property needs --property and --size")
        prop = lookup_property(args.property)
        report.add("property", prop.name)
        report.add("size", args.size)
        with report.timed("count"):
            if method == "brute":
                return count_property_brute(prop, args.size, host, self.config)
            return count_property_exact(prop, args.size, host, self.config)
