"""Verification subcommand for gadgets, witnesses and decompositions."""

from __future__ import annotations

import argparse
from typing import override

from ..core.errors import DegenCountError
from ..gadgets.fgadget import validate_fgadget
from ..gadgets.witness import validate_witness
from ..io.formats import read_gadget, read_witness
from ..io.report import Report
from .base import BaseHandler
from .dtd_handlers import DtdHandler


class VerifyHandler(BaseHandler):
    """Handler for ``verify {gadget,witness,dtd}``."""

    @override
    def run(self, args: argparse.Namespace) -> int:
        if args.kind == "dtd":
            dag = self.orient(self.load(args.pattern), args.order)
            report = Report("verify dtd")
            report.add("pattern", args.pattern)
            return DtdHandler(self._ctx).validate(args, dag, report)
        pattern = self.load(args.pattern)
        report = Report(f"verify {args.kind}")
        report.add("pattern", args.pattern)
        if args.kind == "gadget":
            if args.gadget is None:
                raise DegenCountError("verify gadget needs --gadget")
            gadget = read_gadget(args.gadget)
            report.add("base_vertices", gadget.base.n)
            return self.verdict(report, validate_fgadget(gadget.base, pattern, gadget))
        if args.witness is None or args.minor is None:
            raise DegenCountError("verify witness needs --minor and --witness")
        minor = self.load(args.minor)
        witness = read_witness(args.witness, induced=not args.relaxed)
        report.add("minor", args.minor)
        report.add("induced", witness.induced)
        return self.verdict(report, validate_witness(minor, pattern, witness))
