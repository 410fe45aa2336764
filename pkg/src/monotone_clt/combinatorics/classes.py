"""
Partition-class predicates and per-class counts for the four independences.
"""

from fractions import Fraction
from math import factorial
from typing import Dict, Sequence, Tuple

from .enumeration import DEFAULT_CAP, enumerate_pair_maps, enumerate_pairings
from .models import ClassFlags, ColorMap, IndependenceClass
from .peaks import is_peakless


def _crosses(a: Tuple[int, int], b: Tuple[int, int]) -> bool:
    (i, k), (j, l) = sorted([a, b])
    return i < j < k < l


def _nests(outer: Tuple[int, int], inner: Tuple[int, int]) -> bool:
    return outer[0] < inner[0] and inner[1] < outer[1]


def is_noncrossing(pairs: Sequence[Tuple[int, int]]) -> bool:
    return not any(_crosses(a, b) for index, a in enumerate(pairs) for b in pairs[index + 1:])


def is_interval(pairs: Sequence[Tuple[int, int]]) -> bool:
    return all(right == left + 1 for left, right in pairs)


def classify(f: ColorMap) -> ClassFlags:
    """Evaluate the peakless, noncrossing, interval and monotone predicates on f."""
    blocks = f.blocks()
    pairs = [(left, right) for left, right, _ in blocks]
    noncrossing = is_noncrossing(pairs)
    increasing_nesting = all(
        inner_color > outer_color
        for outer_left, outer_right, outer_color in blocks
        for inner_left, inner_right, inner_color in blocks
        if _nests((outer_left, outer_right), (inner_left, inner_right))
    )
    return ClassFlags(
        peakless=is_peakless(f),
        noncrossing=noncrossing,
        interval=is_interval(pairs),
        monotone=noncrossing and increasing_nesting,
    )


def class_pair_counts(m: int, cap: int = DEFAULT_CAP) -> Dict[IndependenceClass, int]:
    """Number of pair maps over exactly m colors that each class counts."""
    counts = {independence: 0 for independence in IndependenceClass}
    for f in enumerate_pair_maps(m, m, cap):
        flags = classify(f)
        for independence in IndependenceClass:
            if flags.member_of(independence):
                counts[independence] += 1
    return counts


def class_limit_moment(m: int, independence: IndependenceClass, cap: int = DEFAULT_CAP) -> Fraction:
    """The 2m-th CLT limit moment as (class pair maps over m colors) / m!."""
    return Fraction(class_pair_counts(m, cap)[IndependenceClass(independence)], factorial(m))


def pairing_counts(m: int, cap: int = DEFAULT_CAP) -> Dict[str, int]:
    """Uncoloured pairings of 2m points: all, noncrossing and interval."""
    pairings = enumerate_pairings(m, cap)
    return {
        "all": len(pairings),
        "noncrossing": sum(1 for pairing in pairings if is_noncrossing(pairing)),
        "interval": sum(1 for pairing in pairings if is_interval(pairing)),
    }
