"""
Mixed-moment reduction under monotone independence.

A block whose color exceeds the colors of its neighbouring blocks is a peak of the
index map; its moment factors out, the block is deleted and equal neighbours merge.
"""

import logging
import random
from fractions import Fraction
from typing import Callable, List, Mapping, Sequence, Union

from ..combinatorics.models import ColorMap
from ..combinatorics.peaks import peaks
from ..exceptions import InvalidInputError
from .models import BlockWord, MomentSequence, Word, as_word

logger = logging.getLogger(__name__)

Moments = Union[MomentSequence, Mapping[int, MomentSequence]]
PeakChooser = Callable[[List[int]], int]


def merge_runs(w: Union[Word, Sequence[int]]) -> BlockWord:
    """Collapse maximal runs of equal colors into (color, power) blocks."""
    blocks: List[List[int]] = []
    for color in as_word(w).colors:
        if blocks and blocks[-1][0] == color:
            blocks[-1][1] += 1
        else:
            blocks.append([color, 1])
    return BlockWord(tuple((color, power) for color, power in blocks))


def sequence_for(moments: Moments, color: int) -> MomentSequence:
    """The moment sequence of one variable, from a shared sequence or a per-color mapping."""
    if isinstance(moments, MomentSequence):
        return moments
    try:
        return moments[color]
    except KeyError:
        raise InvalidInputError(f"No moment sequence supplied for color {color}")


def check_orders(w: Word, moments: Moments) -> None:
    """Raise InsufficientMomentsError if any color's multiplicity exceeds its order."""
    for color, multiplicity in sorted(w.multiplicities().items()):
        sequence_for(moments, color).moment(multiplicity, color)


def leftmost_maximum(colors: List[int]) -> int:
    """0-based index of the leftmost block carrying the largest color."""
    return colors.index(max(colors))


def random_peak_strategy(rng: random.Random) -> PeakChooser:
    """Chooser that factors a uniformly random peak block."""

    def choose(colors: List[int]) -> int:
        return rng.choice(sorted(peaks(colors))) - 1

    return choose


def reduce_monotone_with(w: Union[Word, Sequence[int]], moments: Moments,
                         choose: PeakChooser) -> Fraction:
    """φ(a_{λ_1}...a_{λ_n}), factoring whichever peak block `choose` picks."""
    word = as_word(w)
    check_orders(word, moments)
    blocks = [list(block) for block in merge_runs(word).blocks]
    accumulator = Fraction(1)
    while len(blocks) > 1:
        index = choose([color for color, _ in blocks])
        color, power = blocks.pop(index)
        accumulator *= sequence_for(moments, color).moment(power, color)
        if accumulator == 0:
            return accumulator
        if 0 < index < len(blocks) and blocks[index - 1][0] == blocks[index][0]:
            blocks[index - 1][1] += blocks.pop(index)[1]
    if blocks:
        color, power = blocks[0]
        accumulator *= sequence_for(moments, color).moment(power, color)
    return accumulator


def reduce_monotone(w: Union[Word, Sequence[int]], moments: Moments) -> Fraction:
    """φ(a_{λ_1}...a_{λ_n}) by iterated peak factorization.

    The leftmost block with the globally maximal color is always a peak of the block
    sequence, so it is factored first. The empty word evaluates to 1.

    Raises:
        InsufficientMomentsError: If a color's multiplicity exceeds its sequence order.
    """
    return reduce_monotone_with(w, moments, leftmost_maximum)


def pair_partition_weight(f: ColorMap, moments: MomentSequence) -> Fraction:
    """The mixed moment of a pair map's word with every color sharing `moments`."""
    if moments.max_order < 2:
        raise InvalidInputError("Pair-partition weights need moments up to order 2")
    return reduce_monotone(f.labels, moments)


def verify_singleton(w: Union[Word, Sequence[int]], position: int, moments: Moments) -> bool:
    """Check φ(a_1...a_s...a_n) = φ(a_s)·φ(a_1...a_{s-1}a_{s+1}...a_n) at a singleton s.

    Raises:
        InvalidInputError: If position s is out of range or its color occurs elsewhere.
    """
    word = as_word(w)
    if not 1 <= position <= len(word):
        raise InvalidInputError(f"Position {position} outside 1..{len(word)}")
    color = word.colors[position - 1]
    if word.colors.count(color) != 1:
        raise InvalidInputError(f"Position {position} is not a singleton: color {color} repeats")

    whole = reduce_monotone(word, moments)
    factored = sequence_for(moments, color).moment(1, color) * reduce_monotone(word.without(position), moments)
    if whole != factored:
        logger.debug(f"Singleton condition fails for {word.colors} at {position}: {whole} != {factored}")
    return whole == factored
