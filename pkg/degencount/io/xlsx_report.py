"""Export run reports to XLSX workbooks using openpyxl."""

from __future__ import annotations

from pathlib import Path
from typing import TYPE_CHECKING

from .report import Report

if TYPE_CHECKING:
    from openpyxl import Workbook
    from openpyxl.styles import Font

try:
    from openpyxl import Workbook
    from openpyxl.styles import Font

    OPENPYXL_AVAILABLE = True
except ImportError:
    OPENPYXL_AVAILABLE = False


class XlsxReportWriter:
    """Write one or more reports to a workbook, one sheet per report."""

    def __init__(self, reports: list[Report], timings: bool = False) -> None:
        self.reports = reports
        self.timings = timings

    def save(self, filepath: str | Path) -> None:
        """Save the workbook.

        Raises:
            ImportError: If openpyxl is not installed
        """
        if not OPENPYXL_AVAILABLE:
            raise ImportError(
                "openpyxl is required for XLSX export. Install with: uv add openpyxl"
            )

        wb = Workbook()
        ws = wb.active
        assert ws is not None, "New workbook should have an active sheet"
        for i, report in enumerate(self.reports):
            sheet = ws if i == 0 else wb.create_sheet()
            # Sheet titles are capped at 31 characters
            sheet.title = f"{i + 1}-{report.title}"[:31]
            sheet.cell(row=1, column=1, value="key").font = Font(bold=True)
            sheet.cell(row=1, column=2, value="value").font = Font(bold=True)
            for row, (key, value) in enumerate(report.all_rows(self.timings), start=2):
                sheet.cell(row=row, column=1, value=key)
                sheet.cell(row=row, column=2, value=_cell_value(value))
            sheet.column_dimensions["A"].width = max(
                (len(key) for key, _ in report.all_rows(self.timings)), default=8
            ) + 2
        wb.save(str(filepath))
        wb.close()


def _cell_value(text: str) -> int | str:
    """Integers are stored as numbers so the sheet can compute with them."""
    try:
        return int(text)
    except ValueError:
        return text
