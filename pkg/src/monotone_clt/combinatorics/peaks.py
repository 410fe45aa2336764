"""
Peak detection for maps between finite linearly ordered sets.

A position is a peak when its value strictly exceeds the value at every adjacent
position. Boundary positions have one neighbour; a lone position is a peak vacuously.
"""

import logging
from typing import FrozenSet, List, Sequence, Tuple

from ..exceptions import InvalidInputError
from .models import ColorMap

logger = logging.getLogger(__name__)


def peaks(labels: Sequence[int]) -> FrozenSet[int]:
    """Return the 1-based positions that are peaks of the label sequence.

    Raises:
        InvalidInputError: If the sequence is empty.
    """
    if len(labels) == 0:
        raise InvalidInputError("Peaks are undefined for an empty sequence")

    last = len(labels) - 1
    result = set()
    for index, value in enumerate(labels):
        left_ok = index == 0 or value > labels[index - 1]
        right_ok = index == last or value > labels[index + 1]
        if left_ok and right_ok:
            result.add(index + 1)
    return frozenset(result)


def _without_top_pair(labels: List[int]) -> Tuple[List[int], int]:
    top = max(labels)
    left = labels.index(top)
    right = labels.index(top, left + 1)
    if right != left + 1:
        raise InvalidInputError(
            f"Top color {top} sits at positions {left + 1} and {right + 1}, which are not adjacent"
        )
    return labels[:left] + labels[right + 1:], left + 1


def is_peakless(f: ColorMap) -> bool:
    """True when no peak appears in f or in any restriction left by deleting top pairs.

    Deleting the top-colour pair of a peakless map must leave a peakless map on the
    remaining positions with their induced order. Checking every stage keeps the set
    equal to the maps produced by painting.
    """
    labels = list(f.labels)
    while labels:
        if peaks(labels):
            return False
        labels, _ = _without_top_pair(labels)
    return True


def remove_top_block(f: ColorMap) -> Tuple[ColorMap, int]:
    """Delete the two positions carrying the maximal color.

    Returns the restricted map and the left position of the removed pair. The color
    range shrinks by one when the removed color was the largest available.

    Raises:
        InvalidInputError: If f is empty or its top pair is not adjacent.
    """
    if not f.labels:
        raise InvalidInputError("The empty map has no top block")
    remaining, position = _without_top_pair(list(f.labels))
    num_colors = f.num_colors - 1 if max(f.labels) == f.num_colors else f.num_colors
    return ColorMap(tuple(remaining), max(num_colors, 1)), position


def top_pair_adjacent(f: ColorMap) -> bool:
    """Whether the two positions of the maximal color are neighbours."""
    top = max(f.labels)
    left = f.labels.index(top)
    return f.labels[left + 1] == top
