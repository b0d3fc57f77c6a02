"""Exact homomorphism counting: oracles, the decomposition DP and coloured variants."""

from .brute import (
    count_embeddings_brute,
    count_homs_brute,
    count_indsubs_brute,
    count_property_brute,
    count_subs_brute,
)
from .coloured import count_cf_homs, count_colour_respecting_homs, count_cp_homs
from .homs import (
    CountStats,
    HostOrientation,
    count_homs_dtd,
    count_homs_dtd_stats,
    count_homs_oriented,
)
from .tables import HashedTable, OrderedTable, make_table

__all__ = [
    "CountStats",
    "HashedTable",
    "HostOrientation",
    "OrderedTable",
    "count_cf_homs",
    "count_colour_respecting_homs",
    "count_cp_homs",
    "count_embeddings_brute",
    "count_homs_brute",
    "count_homs_dtd",
    "count_homs_dtd_stats",
    "count_homs_oriented",
    "count_indsubs_brute",
    "count_property_brute",
    "count_subs_brute",
    "make_table",
]
