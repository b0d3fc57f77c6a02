"""Run reports rendered as aligned plain text or ``key=value`` lines."""

from __future__ import annotations

import time
from collections.abc import Iterable, Iterator
from contextlib import contextmanager
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class ReportFormat(Enum):
    """Report rendering style."""

    PLAIN = "plain"
    KV = "kv"


def format_value(value: object) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    if isinstance(value, (list, tuple, frozenset, set)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return " ".join(format_value(v) for v in items)
    return str(value)


@dataclass
class Report:
    """Ordered key/value rows produced by one subcommand.

    Attributes:
        title: Subcommand name shown in the header
        rows: Report rows in insertion order
        timings: Elapsed milliseconds per timed phase
    """

    title: str
    rows: list[tuple[str, object]] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=dict)

    def add(self, key: str, value: object) -> None:
        self.rows.append((key, value))

    def extend(self, rows: Iterable[tuple[str, object]], prefix: str = "") -> None:
        self.rows.extend((f"{prefix}{key}", value) for key, value in rows)

    def get(self, key: str) -> object | None:
        return next((value for k, value in self.rows if k == key), None)

    @contextmanager
    def timed(self, phase: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.timings[phase] = (time.perf_counter() - started) * 1000.0

    def all_rows(self, timings: bool = False) -> list[tuple[str, str]]:
        rows = [(key, format_value(value)) for key, value in self.rows]
        if timings:
            rows.extend((f"time_{phase}_ms", f"{ms:.3f}") for phase, ms in self.timings.items())
        return rows

    def render(self, fmt: ReportFormat = ReportFormat.PLAIN, timings: bool = False) -> str:
        """Render the report; timings are left out unless asked for."""
        rows = self.all_rows(timings)
        if fmt is ReportFormat.KV:
            return "".join(f"{key}={value}\n" for key, value in [("report", self.title), *rows])
        width = max((len(key) for key, _ in rows), default=0)
        lines = [self.title]
        lines.extend(f"  {key.ljust(width)}  {value}" for key, value in rows)
        return "\n".join(lines) + "\n"
