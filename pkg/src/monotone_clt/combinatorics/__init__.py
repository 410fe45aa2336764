"""
Pair-partition combinatorics: peaks, peakless enumeration, painting and class predicates.
"""

from .classes import (class_limit_moment, class_pair_counts, classify,
                      is_interval, is_noncrossing, pairing_counts)
from .counting import catalan, count_pair_maps, count_peakless, double_factorial
from .enumeration import (DEFAULT_CAP, check_cap, enumerate_pair_maps,
                          enumerate_pairings, enumerate_peakless)
from .models import ClassFlags, ColorMap, EnumerationMethod, IndependenceClass, PaintRank
from .painting import (decode_subset, encode_subset, iter_paint_ranks,
                       paint_rank, paint_unrank)
from .peaks import is_peakless, peaks, remove_top_block, top_pair_adjacent

__all__ = [
    "ColorMap",
    "PaintRank",
    "ClassFlags",
    "EnumerationMethod",
    "IndependenceClass",
    "peaks",
    "is_peakless",
    "remove_top_block",
    "top_pair_adjacent",
    "enumerate_pair_maps",
    "enumerate_peakless",
    "enumerate_pairings",
    "check_cap",
    "DEFAULT_CAP",
    "paint_unrank",
    "paint_rank",
    "iter_paint_ranks",
    "decode_subset",
    "encode_subset",
    "count_peakless",
    "count_pair_maps",
    "double_factorial",
    "catalan",
    "classify",
    "class_pair_counts",
    "class_limit_moment",
    "pairing_counts",
    "is_noncrossing",
    "is_interval",
]
