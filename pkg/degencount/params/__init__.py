"""Structural parameters of patterns and the complexity verdicts they imply."""

from .classify import FamilyDeclaration, ParamReport, classify
from .structure import (
    independence_number,
    induced_matching_number,
    is_edge_transitive,
    vertex_cover_number,
)

__all__ = [
    "FamilyDeclaration",
    "ParamReport",
    "classify",
    "independence_number",
    "induced_matching_number",
    "is_edge_transitive",
    "vertex_cover_number",
]
