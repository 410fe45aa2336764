"""
The painting procedure: put 2m balls in line, choose m colors, then repeatedly paint
a neighbouring pair of unpainted balls with the highest color not yet used.

Ranks are (subset_index, digits). The subset index is the combinatorial number
system rank of the chosen colors; digit k selects the adjacent unpainted pair for the
k-th highest color, counted from the left, so digit k ranges over 0..2(m-k+1)-2.
"""

import itertools
from math import comb
from typing import Iterator, List, Tuple

from ..exceptions import InvalidInputError
from .counting import check_pairs_and_colors
from .models import ColorMap, PaintRank


def decode_subset(subset_index: int, m: int, num_colors: int) -> Tuple[int, ...]:
    """Colors of the ranked m-subset of {1..N}, in descending order."""
    if not 0 <= subset_index < comb(num_colors, m):
        raise InvalidInputError(
            f"subset_index {subset_index} outside 0..{comb(num_colors, m) - 1} for m={m}, N={num_colors}"
        )
    remainder = subset_index
    colors = []
    candidate = num_colors - 1
    for k in range(m, 0, -1):
        while comb(candidate, k) > remainder:
            candidate -= 1
        remainder -= comb(candidate, k)
        colors.append(candidate + 1)
        candidate -= 1
    return tuple(colors)


def encode_subset(colors: Tuple[int, ...]) -> int:
    """Inverse of decode_subset."""
    descending = sorted(colors, reverse=True)
    m = len(descending)
    return sum(comb(color - 1, m - i) for i, color in enumerate(descending))


def digit_ranges(m: int) -> List[range]:
    return [range(2 * (m - k + 1) - 1) for k in range(1, m + 1)]


def iter_paint_ranks(m: int, num_colors: int) -> Iterator[PaintRank]:
    """All valid ranks: subset_index ascending, digits as a mixed-radix counter."""
    check_pairs_and_colors(m, num_colors)
    ranges = digit_ranges(m)
    for subset_index in range(comb(num_colors, m)):
        for digits in itertools.product(*ranges):
            yield PaintRank(subset_index, digits)


def paint_unrank(m: int, num_colors: int, rank: PaintRank) -> ColorMap:
    """Run the painting procedure with the choices recorded in `rank`.

    Raises:
        InvalidInputError: If (m, N) or any part of the rank is out of bounds.
    """
    check_pairs_and_colors(m, num_colors)
    rank.validate(m, num_colors)

    labels = [0] * (2 * m)
    unpainted = list(range(2 * m))
    for color, digit in zip(decode_subset(rank.subset_index, m, num_colors), rank.digits):
        left, right = unpainted[digit], unpainted[digit + 1]
        labels[left] = labels[right] = color
        del unpainted[digit:digit + 2]
    return ColorMap(tuple(labels), num_colors)


def paint_rank(f: ColorMap) -> PaintRank:
    """Recover the rank that paints f.

    Raises:
        InvalidInputError: If f cannot be painted, i.e. it is not peakless.
    """
    if not f.labels:
        raise InvalidInputError("The empty map has no paint rank")
    descending = sorted(f.colors, reverse=True)
    unpainted = list(range(len(f.labels)))
    digits = []
    for color in descending:
        left = f.labels.index(color)
        digit = unpainted.index(left)
        if digit + 1 >= len(unpainted) or f.labels[unpainted[digit + 1]] != color:
            raise InvalidInputError(f"{f} is not peakless: color {color} is not an adjacent pair")
        digits.append(digit)
        del unpainted[digit:digit + 2]
    return PaintRank(encode_subset(tuple(descending)), tuple(digits))
