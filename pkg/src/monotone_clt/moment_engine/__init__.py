"""
Exact mixed-moment evaluation under monotone independence and finite-N CLT moments.
"""

from .clt import (SumMode, count_patterns, normalized_moment, pair_partition_normalized_sum,
                  pattern_totals, sum_moment, surjective_patterns)
from .limits import limit_moment, limit_moments
from .models import BlockWord, LimitMoments, MomentSequence, Word
from .moment_file import dump_moment_sequence, load_moment_file, parse_moment_string
from .reduction import (merge_runs, pair_partition_weight, random_peak_strategy,
                        reduce_monotone, reduce_monotone_with, verify_singleton)

__all__ = [
    "MomentSequence",
    "Word",
    "BlockWord",
    "LimitMoments",
    "SumMode",
    "merge_runs",
    "reduce_monotone",
    "reduce_monotone_with",
    "random_peak_strategy",
    "pair_partition_weight",
    "verify_singleton",
    "sum_moment",
    "normalized_moment",
    "pair_partition_normalized_sum",
    "pattern_totals",
    "count_patterns",
    "surjective_patterns",
    "limit_moment",
    "limit_moments",
    "load_moment_file",
    "parse_moment_string",
    "dump_moment_sequence",
]
