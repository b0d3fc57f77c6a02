"""degencount - command-line entry point."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from typing import TextIO

from .config import EngineConfig
from .core.errors import DegenCountError, ExitCode
from .handlers import (
    ApproxHandler,
    BaseHandler,
    ClassifyHandler,
    CountHandler,
    DtdHandler,
    ParamsHandler,
    ReduceHandler,
    VerifyHandler,
)
from .io.report import Report, ReportFormat
from .io.xlsx_report import XlsxReportWriter

logger = logging.getLogger(__name__)

HANDLERS: dict[str, type[BaseHandler]] = {
    "count": CountHandler,
    "approx": ApproxHandler,
    "classify": ClassifyHandler,
    "params": ParamsHandler,
    "dtd": DtdHandler,
    "reduce": ReduceHandler,
    "verify": VerifyHandler,
}


class CommandLineApp:
    """Runs one subcommand and writes the reports it produced."""

    def __init__(self, args: argparse.Namespace, out: TextIO | None = None) -> None:
        self.args = args
        self.out = out or sys.stdout
        self.config = EngineConfig.load().with_overrides(threads=args.threads)
        self.reports: list[Report] = []

    def emit(self, report: Report) -> None:
        self.reports.append(report)

    def run(self) -> int:
        handler = HANDLERS[self.args.command](self)
        try:
            code = handler.run(self.args)
        finally:
            self._flush()
        return code

    def _flush(self) -> None:
        fmt = ReportFormat(self.args.format)
        for report in self.reports:
            self.out.write(report.render(fmt, self.args.timings))
        if self.args.xlsx and self.reports:
            XlsxReportWriter(self.reports, self.args.timings).save(self.args.xlsx)
            logger.info(f"wrote {len(self.reports)} report(s) to {self.args.xlsx}")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in ReportFormat], default="plain")
    common.add_argument("--threads", type=int, default=None, help="Worker threads")
    common.add_argument("--timings", action="store_true", help="Include phase timings")
    common.add_argument("--xlsx", metavar="PATH", help="Also export the report as a workbook")
    common.add_argument("-v", "--verbose", action="count", default=0)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="degencount",
        description="Count patterns in degenerate graphs via dag tree decompositions",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    count = commands.add_parser("count", parents=[common], help="Exact counting")
    count.add_argument("problem", choices=["sub", "indsub", "hom", "property"])
    count.add_argument("--pattern")
    count.add_argument("--host", required=True)
    method = count.add_mutually_exclusive_group()
    method.add_argument("--exact", action="store_true", help="Basis-based counting (default)")
    method.add_argument("--brute", action="store_true", help="Exhaustive map enumeration")
    count.add_argument("--property")
    count.add_argument("--size", type=int)

    approx = commands.add_parser("approx", parents=[common], help="Approximate counting")
    approx.add_argument("problem", choices=["sub", "indsub", "property"])
    approx.add_argument("--pattern")
    approx.add_argument("--host", required=True)
    approx.add_argument("--eps", type=float, required=True)
    approx.add_argument("--seed", type=int, default=0)
    approx.add_argument("--threshold", type=int)
    approx.add_argument("--property")
    approx.add_argument("--size", type=int)
    approx.add_argument("--samples-per-group", type=int)
    approx.add_argument("--samples", type=int)

    classify = commands.add_parser("classify", parents=[common], help="Complexity verdicts")
    classify.add_argument("--pattern", required=True)
    classify.add_argument("--bounded", help="Comma-separated parameters bounded on the family")
    classify.add_argument("--family", help="Family name shown with --bounded")
    classify.add_argument("--no-taus", action="store_true", help="Skip exhaustive tau")

    params = commands.add_parser("params", parents=[common], help="Structural parameters")
    params.add_argument("--pattern", required=True)
    params.add_argument("--no-taus", action="store_true", help="Skip exhaustive tau")

    dtd = commands.add_parser("dtd", parents=[common], help="Dag tree decompositions")
    dtd.add_argument("action", choices=["build", "validate", "from-parse", "from-gadget"])
    dtd.add_argument("--pattern", required=True)
    dtd.add_argument("--order", type=int, nargs="+", help="Vertex order orienting the pattern")
    dtd.add_argument("--optimal", action="store_true", help="Exhaustive minimum width")
    dtd.add_argument("--dtd")
    dtd.add_argument("--parse-tree")
    dtd.add_argument("--gadget")
    dtd.add_argument("--output", help="Write the decomposition to this file")

    reduce = commands.add_parser("reduce", parents=[common], help="Gadget reductions")
    reduce.add_argument("kind", choices=["cphom"])
    reduce.add_argument("--base", required=True)
    reduce.add_argument("--pattern", required=True)
    reduce.add_argument("--gadget", required=True)
    reduce.add_argument("--host", required=True)
    reduce.add_argument("--colouring", required=True)
    reduce.add_argument("--output", metavar="PREFIX")
    reduce.add_argument("--verify-counts", action="store_true")

    verify = commands.add_parser("verify", parents=[common], help="Validate input structures")
    verify.add_argument("kind", choices=["gadget", "witness", "dtd"])
    verify.add_argument("--pattern", required=True)
    verify.add_argument("--gadget")
    verify.add_argument("--minor")
    verify.add_argument("--witness")
    verify.add_argument("--relaxed", action="store_true", help="Plain (not induced) minor")
    verify.add_argument("--dtd")
    verify.add_argument("--order", type=int, nargs="+")
    return parser


def _configure_logging(verbosity: int) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else ExitCode.USAGE_ERROR
    _configure_logging(args.verbose)
    try:
        return CommandLineApp(args).run()
    except (DegenCountError, OSError, ImportError) as exc:
        print(f"degencount: error: {exc}", file=sys.stderr)
        return ExitCode.USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
