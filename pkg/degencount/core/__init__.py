"""Core graph model: graphs, partitions, colourings, families and canonical forms."""

from .canonical import are_isomorphic, automorphism_count, canonical_form, canonical_order
from .degeneracy import DegeneracyOrder, degeneracy, degeneracy_order
from .errors import (
    BasisIntegrityError,
    BoundExceededError,
    ColouringError,
    DecompositionError,
    DegenCountError,
    ExitCode,
    FormatError,
    GadgetError,
    GraphError,
    ParameterError,
    SelfLoopError,
    SingularSystemError,
    WitnessError,
)
from .generators import (
    all_graphs,
    biclique,
    clique,
    cycle,
    grid,
    independent_set,
    matching,
    path,
    random_degenerate,
    wreath,
)
from .graph import ColouredGraph, Graph, VertexPartition, set_partitions
from .patterns import PATTERNS, PatternRegistry
from .transforms import quotient, remove_colour_classes, subdivide, tensor_product

__all__ = [
    "BasisIntegrityError",
    "BoundExceededError",
    "ColouredGraph",
    "ColouringError",
    "DecompositionError",
    "DegenCountError",
    "DegeneracyOrder",
    "ExitCode",
    "FormatError",
    "GadgetError",
    "Graph",
    "GraphError",
    "ParameterError",
    "PATTERNS",
    "PatternRegistry",
    "SelfLoopError",
    "SingularSystemError",
    "VertexPartition",
    "WitnessError",
    "all_graphs",
    "are_isomorphic",
    "automorphism_count",
    "biclique",
    "canonical_form",
    "canonical_order",
    "clique",
    "cycle",
    "degeneracy",
    "degeneracy_order",
    "grid",
    "independent_set",
    "matching",
    "path",
    "quotient",
    "random_degenerate",
    "remove_colour_classes",
    "set_partitions",
    "subdivide",
    "tensor_product",
    "wreath",
]
