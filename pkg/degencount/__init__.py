"""degencount - counting small patterns in degenerate host graphs.

This package provides:
- Graphs, partitions, colourings and small-graph canonical forms
- Acyclic orientations and dag tree decompositions with validators
- Exact homomorphism counting over dag tree decompositions
- Subgraph, induced subgraph and property counts via hom-bases
- F-gadgets, minor witnesses and the colour-prescribed reduction
- Colourful detectors and seeded approximate counting
- Structural parameters and complexity verdicts for pattern families
"""

# Approximation
from .approx import (
    ApproxResult,
    approx_count_indsubs,
    approx_count_property,
    approx_count_subs,
    detect_multicol_indsub,
    detect_multicol_is,
    detect_multicol_sub,
)

# Bases
from .basis import (
    PROPERTIES,
    GraphProperty,
    HomBasis,
    count_indsubs_exact,
    count_property_exact,
    count_subs_exact,
    indsub_basis,
    sub_basis,
)
from .config import EngineConfig

# Core graph model
from .core import (
    PATTERNS,
    ColouredGraph,
    DegenCountError,
    Graph,
    VertexPartition,
    degeneracy,
    degeneracy_order,
)

# Counting engines
from .counting import count_cp_homs, count_homs_brute, count_homs_dtd

# Decompositions
from .dtd import (
    DagTreeDecomposition,
    OrientedGraph,
    dag_treewidth,
    find_kernel,
    orient_by_order,
    validate_dtd,
)

# Gadgets
from .gadgets import FGadget, MinorWitness, reduce_cphom, validate_fgadget, validate_witness

# Parameters
from .params import classify

__version__ = "1.0.0"

__all__ = [
    # Core
    "Graph",
    "ColouredGraph",
    "VertexPartition",
    "PATTERNS",
    "DegenCountError",
    "degeneracy",
    "degeneracy_order",
    "EngineConfig",
    # Decompositions
    "OrientedGraph",
    "DagTreeDecomposition",
    "orient_by_order",
    "find_kernel",
    "dag_treewidth",
    "validate_dtd",
    # Counting
    "count_homs_dtd",
    "count_homs_brute",
    "count_cp_homs",
    # Bases
    "HomBasis",
    "sub_basis",
    "indsub_basis",
    "count_subs_exact",
    "count_indsubs_exact",
    "count_property_exact",
    "GraphProperty",
    "PROPERTIES",
    # Gadgets
    "FGadget",
    "MinorWitness",
    "validate_fgadget",
    "validate_witness",
    "reduce_cphom",
    # Approximation
    "ApproxResult",
    "approx_count_subs",
    "approx_count_indsubs",
    "approx_count_property",
    "detect_multicol_is",
    "detect_multicol_sub",
    "detect_multicol_indsub",
    # Parameters
    "classify",
]
