"""
Finite-N central limit moments for identically distributed monotone independent variables.

Two words with the same order-isomorphism pattern have the same mixed moment when
every variable shares one moment sequence, so the sum over all N^m words groups into
surjective patterns weighted by C(N, k).
"""

import itertools
import logging
import math
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, List, Tuple, Union

from ..combinatorics.counting import check_pairs_and_colors
from ..combinatorics.enumeration import DEFAULT_CAP, check_cap, enumerate_pair_maps
from ..exceptions import InvalidInputError
from .models import MomentSequence, Word
from .reduction import Moments, pair_partition_weight, reduce_monotone, sequence_for

logger = logging.getLogger(__name__)

PATTERN_CACHE_SIZE = 64


class SumMode(str, Enum):
    """How the sum over words or pair maps is evaluated."""

    PATTERN = "pattern"
    DIRECT = "direct"


def _set_partitions(m: int, k: int, min_size: int) -> Iterator[Tuple[int, ...]]:
    """Restricted growth strings of length m with exactly k blocks of size >= min_size."""
    assignment: List[int] = []
    sizes: List[int] = []

    def extend(position: int) -> Iterator[Tuple[int, ...]]:
        shortfall = sum(max(0, min_size - size) for size in sizes) + (k - len(sizes)) * min_size
        if shortfall > m - position:
            return
        if position == m:
            if len(sizes) == k:
                yield tuple(assignment)
            return
        for block in range(len(sizes)):
            sizes[block] += 1
            assignment.append(block)
            yield from extend(position + 1)
            assignment.pop()
            sizes[block] -= 1
        if len(sizes) < k:
            sizes.append(1)
            assignment.append(len(sizes) - 1)
            yield from extend(position + 1)
            assignment.pop()
            sizes.pop()

    yield from extend(0)


def surjective_patterns(m: int, k: int, min_multiplicity: int = 1) -> Iterator[Tuple[int, ...]]:
    """Words of length m using every label 1..k at least min_multiplicity times."""
    for partition in _set_partitions(m, k, max(min_multiplicity, 1)):
        for labels in itertools.permutations(range(1, k + 1)):
            yield tuple(labels[block] for block in partition)


def count_patterns(m: int, min_multiplicity: int = 1) -> int:
    """Number of words of length m onto exactly k labels, each used at least
    min_multiplicity times, summed over k.

    Uses k! times the associated Stirling numbers S_r(n, k), with
    S_r(n, k) = k S_r(n-1, k) + C(n-1, r-1) S_r(n-r, k-1).
    """
    r = max(min_multiplicity, 1)
    stirling = [[0] * (m + 1) for _ in range(m + 1)]
    stirling[0][0] = 1
    for n in range(1, m + 1):
        for k in range(1, n + 1):
            value = k * stirling[n - 1][k]
            if n >= r:
                value += comb(n - 1, r - 1) * stirling[n - r][k - 1]
            stirling[n][k] = value
    return sum(math.factorial(k) * stirling[m][k] for k in range(1, m + 1))


def _min_multiplicity(moments: MomentSequence) -> int:
    # Patterns with a label of multiplicity one vanish when μ_1 = 0.
    return 2 if moments.max_order >= 1 and moments.moments[1] == 0 else 1


def pattern_totals(m: int, moments: MomentSequence, cap: int = DEFAULT_CAP) -> Tuple[Fraction, ...]:
    """Entry k-1 is the summed mixed moment over all patterns onto exactly k labels.

    Patterns with a label of multiplicity one vanish when μ_1 = 0 and are skipped.

    Raises:
        ResourceLimitError: If more than cap patterns would be walked.
    """
    min_multiplicity = _min_multiplicity(moments)
    check_cap(count_patterns(m, min_multiplicity), cap, f"order-{m} patterns")
    return _pattern_totals(m, moments)


@lru_cache(maxsize=PATTERN_CACHE_SIZE)
def _pattern_totals(m: int, moments: MomentSequence) -> Tuple[Fraction, ...]:
    min_multiplicity = _min_multiplicity(moments)
    totals = []
    for k in range(1, m + 1):
        total = Fraction(0)
        count = 0
        for pattern in surjective_patterns(m, k, min_multiplicity):
            total += reduce_monotone(pattern, moments)
            count += 1
        logger.debug(f"m={m}, k={k}: {count} patterns, total {total}")
        totals.append(total)
    return tuple(totals)


def _check_sum_args(num_variables: int, m: int) -> None:
    if num_variables < 1:
        raise InvalidInputError(f"Number of variables must be positive, got {num_variables}")
    if m < 0:
        raise InvalidInputError(f"Moment order must be nonnegative, got {m}")


def sum_moment(num_variables: int, m: int, moments: Moments,
               mode: Union[SumMode, str] = SumMode.PATTERN, cap: int = DEFAULT_CAP) -> Fraction:
    """φ(S_N^m) = Σ over words w in {1..N}^m of the monotone mixed moment of w.

    Pattern mode needs one shared MomentSequence; direct mode also accepts a mapping
    from variable index to its own sequence.

    Raises:
        InsufficientMomentsError: If a sequence stops before order m.
        ResourceLimitError: If pattern mode would walk more than cap patterns, or
            direct mode would visit more than cap words.
    """
    _check_sum_args(num_variables, m)
    mode = SumMode(mode)
    for color in range(1, num_variables + 1):
        sequence_for(moments, color).moment(m, color)
    if m == 0:
        return Fraction(1)

    if mode is SumMode.PATTERN:
        if not isinstance(moments, MomentSequence):
            raise InvalidInputError("Pattern grouping requires one moment sequence shared by all variables")
        totals = pattern_totals(m, moments, cap)
        return sum(
            (comb(num_variables, k) * totals[k - 1] for k in range(1, min(m, num_variables) + 1)),
            Fraction(0),
        )

    check_cap(num_variables ** m, cap, f"{num_variables}^{m} words")
    return sum(
        (reduce_monotone(Word(word), moments)
         for word in itertools.product(range(1, num_variables + 1), repeat=m)),
        Fraction(0),
    )


def normalized_moment(num_variables: int, m: int, moments: Moments,
                      mode: Union[SumMode, str] = SumMode.PATTERN,
                      cap: int = DEFAULT_CAP) -> Union[Fraction, float]:
    """φ((N^{-1/2} Σ a_n)^m): exact for even m, a float for odd m."""
    total = sum_moment(num_variables, m, moments, mode, cap)
    if m % 2 == 0:
        return total / num_variables ** (m // 2)
    return float(total / num_variables ** (m // 2)) / math.sqrt(num_variables)


def pair_partition_normalized_sum(num_variables: int, order: int, moments: MomentSequence,
                                  mode: Union[SumMode, str] = SumMode.PATTERN,
                                  cap: int = DEFAULT_CAP) -> Fraction:
    """N^{-m} Σ over f in Π({1..2m},{1..N}) of the pair-partition weight, for order = 2m.

    Raises:
        InvalidInputError: If order is odd or m is outside 1..N.
        ResourceLimitError: If the pair maps walked exceed cap.
    """
    if order % 2:
        raise InvalidInputError(f"Pair-partition sums need an even order, got {order}")
    m = order // 2
    check_pairs_and_colors(m, num_variables)
    mode = SumMode(mode)

    if mode is SumMode.PATTERN:
        pattern_sum = sum((pair_partition_weight(f, moments) for f in enumerate_pair_maps(m, m, cap)),
                          Fraction(0))
        total = comb(num_variables, m) * pattern_sum
    else:
        total = sum((pair_partition_weight(f, moments) for f in enumerate_pair_maps(m, num_variables, cap)),
                    Fraction(0))
    return total / num_variables ** m
