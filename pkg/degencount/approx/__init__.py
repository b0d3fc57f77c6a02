"""Colourful detectors, seeded random streams and approximate counting."""

from .colourful import colourful_copy_count, colourful_embedding_count, colourful_induced_count
from .detectors import (
    Detection,
    detect_multicol_indsub,
    detect_multicol_is,
    detect_multicol_sub,
    is_colourful_independent,
)
from .estimators import (
    ApproxResult,
    Threshold,
    approx_count_indsubs,
    approx_count_property,
    approx_count_subs,
    find_threshold,
    group_size,
    median_of_means,
    property_sample_count,
)
from .rng import random_colouring, random_subset, trial_generator

__all__ = [
    "ApproxResult",
    "Detection",
    "Threshold",
    "approx_count_indsubs",
    "approx_count_property",
    "approx_count_subs",
    "colourful_copy_count",
    "colourful_embedding_count",
    "colourful_induced_count",
    "detect_multicol_indsub",
    "detect_multicol_is",
    "detect_multicol_sub",
    "find_threshold",
    "group_size",
    "is_colourful_independent",
    "median_of_means",
    "property_sample_count",
    "random_colouring",
    "random_subset",
    "trial_generator",
]
