"""F-gadgets, minor witnesses, the colour-prescribed reduction and grid translations."""

from .constructions import (
    is_induced_matching,
    quotient_with_grid_gadget,
    supergraph_with_grid_gadget,
)
from .fgadget import (
    FGadget,
    GadgetPath,
    fgadget_cliques_on_vertices,
    fgadget_from_subdivision,
    require_fgadget,
    validate_fgadget,
)
from .grids import connecting_path, grid_fgadget_from_witness, grid_witness_from_fgadget
from .reduction import CopyKind, Provenance, ReductionResult, check_claims, reduce_cphom
from .witness import (
    MinorWitness,
    even_block_model,
    identity_grid_model,
    require_witness,
    validate_witness,
)

__all__ = [
    "CopyKind",
    "FGadget",
    "GadgetPath",
    "MinorWitness",
    "Provenance",
    "ReductionResult",
    "check_claims",
    "connecting_path",
    "even_block_model",
    "fgadget_cliques_on_vertices",
    "fgadget_from_subdivision",
    "grid_fgadget_from_witness",
    "grid_witness_from_fgadget",
    "identity_grid_model",
    "is_induced_matching",
    "quotient_with_grid_gadget",
    "reduce_cphom",
    "require_fgadget",
    "require_witness",
    "supergraph_with_grid_gadget",
    "validate_fgadget",
    "validate_witness",
]
