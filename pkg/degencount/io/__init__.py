"""Text formats, run reports and workbook export."""

from .formats import (
    format_colouring,
    format_dtd,
    format_gadget,
    format_graph,
    format_parse_tree,
    format_partition,
    format_witness,
    parse_colouring,
    parse_dtd,
    parse_gadget,
    parse_graph,
    parse_parse_tree,
    parse_partition,
    parse_witness,
    read_colouring,
    read_dtd,
    read_gadget,
    read_graph,
    read_parse_tree,
    read_witness,
    resolve_graph,
    write_graph,
    write_reduction,
)
from .report import Report, ReportFormat
from .xlsx_report import OPENPYXL_AVAILABLE, XlsxReportWriter

__all__ = [
    "OPENPYXL_AVAILABLE",
    "Report",
    "ReportFormat",
    "XlsxReportWriter",
    "format_colouring",
    "format_dtd",
    "format_gadget",
    "format_graph",
    "format_parse_tree",
    "format_partition",
    "format_witness",
    "parse_colouring",
    "parse_dtd",
    "parse_gadget",
    "parse_graph",
    "parse_parse_tree",
    "parse_partition",
    "parse_witness",
    "read_colouring",
    "read_dtd",
    "read_gadget",
    "read_graph",
    "read_parse_tree",
    "read_witness",
    "resolve_graph",
    "write_graph",
    "write_reduction",
]
