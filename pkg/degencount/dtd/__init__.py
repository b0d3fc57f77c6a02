"""Orientations, dag tree decompositions and their constructions."""

from .decomposition import DagTreeDecomposition, validate_dtd
from .kernel import dtd_from_kernel, find_kernel, is_kernel, kernel_dtd
from .oriented import DagLike, OrientedGraph, orient_by_order, orientations
from .parse_tree import (
    CliqueParseTree,
    ParseNode,
    ParseOp,
    dtd_from_clique_parse,
    evaluate_parse_tree,
    parse_tree_from_order,
    skeleton_cliquewidth_bound,
)
from .skeleton import Skeleton, skeleton
from .tree_decomposition import (
    TreeDecomposition,
    tree_decomposition_of,
    validate_tree_decomposition,
)
from .treewidth import dag_treewidth, tau1, tau2, tau3

__all__ = [
    "CliqueParseTree",
    "DagLike",
    "DagTreeDecomposition",
    "OrientedGraph",
    "ParseNode",
    "ParseOp",
    "Skeleton",
    "TreeDecomposition",
    "dag_treewidth",
    "dtd_from_clique_parse",
    "dtd_from_kernel",
    "evaluate_parse_tree",
    "find_kernel",
    "is_kernel",
    "kernel_dtd",
    "orient_by_order",
    "orientations",
    "parse_tree_from_order",
    "skeleton",
    "skeleton_cliquewidth_bound",
    "tau1",
    "tau2",
    "tau3",
    "tree_decomposition_of",
    "validate_dtd",
    "validate_tree_decomposition",
]
