"""
Exhaustive enumeration of pair maps and peakless pair maps.

Every enumerator returns its results in ascending lexicographic order of the label
sequences and refuses instances whose size exceeds the configured cap.
"""

import logging
from typing import Iterator, List, Tuple, Union

from ..exceptions import InvalidInputError, ResourceLimitError
from .counting import count_pair_maps, count_peakless, double_factorial
from .models import ColorMap, EnumerationMethod
from .painting import iter_paint_ranks, paint_unrank
from .peaks import is_peakless

logger = logging.getLogger(__name__)

DEFAULT_CAP = 10 ** 7

Pairing = Tuple[Tuple[int, int], ...]


def check_cap(requested: int, cap: int, what: str) -> None:
    """Raise ResourceLimitError when an enumeration of `requested` items exceeds `cap`."""
    if cap < 1:
        raise InvalidInputError(f"Enumeration cap must be at least 1, got {cap}")
    if requested > cap:
        raise ResourceLimitError(f"Refusing to enumerate {what}", requested=requested, cap=cap)


def _iter_pair_labels(m: int, num_colors: int) -> Iterator[Tuple[int, ...]]:
    length = 2 * m
    labels: List[int] = []
    counts = [0] * (num_colors + 1)
    state = {"open": 0, "used": 0}

    def extend() -> Iterator[Tuple[int, ...]]:
        if len(labels) == length:
            yield tuple(labels)
            return
        for color in range(1, num_colors + 1):
            if counts[color] == 2:
                continue
            opening = counts[color] == 0
            open_after = state["open"] + (1 if opening else -1)
            used_after = state["used"] + (1 if opening else 0)
            remaining = length - len(labels) - 1
            # Unfinished colors must close, and new colors need room in 1..N.
            if open_after > remaining or (remaining - open_after) // 2 > num_colors - used_after:
                continue
            counts[color] += 1
            labels.append(color)
            state["open"], state["used"] = open_after, used_after
            yield from extend()
            labels.pop()
            counts[color] -= 1
            state["open"] += -1 if opening else 1
            state["used"] -= 1 if opening else 0

    yield from extend()


def enumerate_pair_maps(m: int, num_colors: int, cap: int = DEFAULT_CAP,
                        allow_empty: bool = False) -> List[ColorMap]:
    """All of Π({1..2m},{1..N}) exactly once, lexicographically ordered.

    Raises:
        InvalidInputError: If m > N (or m = 0 without allow_empty).
        ResourceLimitError: If C(N,m)·m!·(2m-1)!! exceeds cap.
    """
    total = count_pair_maps(m, num_colors, allow_empty)
    check_cap(total, cap, f"{total} pair maps for m={m}, N={num_colors}")
    logger.debug(f"Enumerating {total} pair maps for m={m}, N={num_colors}")
    return [ColorMap(labels, num_colors) for labels in _iter_pair_labels(m, num_colors)]


def enumerate_peakless(m: int, num_colors: int,
                       method: Union[EnumerationMethod, str] = EnumerationMethod.FILTER,
                       cap: int = DEFAULT_CAP, allow_empty: bool = False) -> List[ColorMap]:
    """Π₀({1..2m},{1..N}) in lexicographic order, by filtering or by painting.

    Raises:
        InvalidInputError: If m > N or the method is unknown.
        ResourceLimitError: If the enumeration the method walks exceeds cap.
    """
    try:
        method = EnumerationMethod(method)
    except ValueError:
        raise InvalidInputError(f"Unknown enumeration method: {method}")

    if method is EnumerationMethod.FILTER:
        maps = [f for f in enumerate_pair_maps(m, num_colors, cap, allow_empty) if is_peakless(f)]
        logger.debug(f"Filter kept {len(maps)} peakless maps for m={m}, N={num_colors}")
        return maps

    total = count_peakless(m, num_colors, allow_empty)
    check_cap(total, cap, f"{total} paint ranks for m={m}, N={num_colors}")
    if m == 0:
        return [ColorMap((), num_colors)]
    maps = [paint_unrank(m, num_colors, rank) for rank in iter_paint_ranks(m, num_colors)]
    maps.sort(key=lambda f: f.labels)
    return maps


def enumerate_pairings(m: int, cap: int = DEFAULT_CAP) -> List[Pairing]:
    """Uncoloured pair partitions of {1..2m} as sorted tuples of (left, right) pairs."""
    if m < 0:
        raise InvalidInputError(f"Number of pairs must be nonnegative, got {m}")
    check_cap(double_factorial(2 * m - 1), cap, f"pairings of {2 * m} points")

    def pairings(items: List[int]) -> Iterator[List[Tuple[int, int]]]:
        if not items:
            yield []
            return
        first, rest = items[0], items[1:]
        for index, partner in enumerate(rest):
            for tail in pairings(rest[:index] + rest[index + 1:]):
                yield [(first, partner)] + tail

    return [tuple(pairing) for pairing in pairings(list(range(1, 2 * m + 1)))]

