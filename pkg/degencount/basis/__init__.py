"""Hom-bases for subgraph, induced-subgraph and property counts."""

from .exact import (
    count_indsubs_exact,
    count_property_exact,
    count_subs_exact,
    evaluate_basis,
    property_basis,
)
from .hombasis import HomBasis, parse_basis_dump
from .lattice import emb_basis, indsub_basis, sub_basis, supergraph_multiplicities
from .properties import PROPERTIES, GraphProperty, PropertyRegistry
from .tensor import choose_test_graphs, recover_hom_counts_via_tensor

__all__ = [
    "PROPERTIES",
    "GraphProperty",
    "HomBasis",
    "PropertyRegistry",
    "choose_test_graphs",
    "count_indsubs_exact",
    "count_property_exact",
    "count_subs_exact",
    "emb_basis",
    "evaluate_basis",
    "indsub_basis",
    "parse_basis_dump",
    "property_basis",
    "recover_hom_counts_via_tensor",
    "sub_basis",
    "supergraph_multiplicities",
]
