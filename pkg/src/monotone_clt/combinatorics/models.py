"""
Data models for pair-partition combinatorics.

A ColorMap is stored as its label sequence; block views are derived on demand.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Any, Dict, List, Tuple

from ..exceptions import InvalidInputError


class EnumerationMethod(str, Enum):
    """How peakless maps are produced."""

    FILTER = "filter"
    PAINT = "paint"


class IndependenceClass(str, Enum):
    """The four basic notions of noncommutative independence."""

    MONOTONE = "monotone"
    COMMUTATIVE = "commutative"
    FREE = "free"
    BOOLEAN = "boolean"


@dataclass(frozen=True)
class ColorMap:
    """A map {1..2m} -> {1..N} in which every used color has exactly two preimages."""

    labels: Tuple[int, ...]
    num_colors: int

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))
        errors = []
        if self.num_colors < 1:
            errors.append(f"num_colors must be positive, got {self.num_colors}")
        for position, color in enumerate(self.labels, start=1):
            if not 1 <= color <= self.num_colors:
                errors.append(f"position {position}: color {color} outside 1..{self.num_colors}")
        for color, count in sorted(Counter(self.labels).items()):
            if count != 2:
                errors.append(f"color {color} occurs {count} times")
        if errors:
            raise InvalidInputError(f"Not a pair map: {self.labels}", errors=errors)

    @property
    def m(self) -> int:
        """Number of blocks."""
        return len(self.labels) // 2

    @property
    def colors(self) -> Tuple[int, ...]:
        """Colors in use, ascending."""
        return tuple(sorted(set(self.labels)))

    def blocks(self) -> List[Tuple[int, int, int]]:
        """Blocks as (left, right, color) with 1-based positions, ordered by left end."""
        first_seen: Dict[int, int] = {}
        result = []
        for position, color in enumerate(self.labels, start=1):
            if color in first_seen:
                result.append((first_seen[color], position, color))
            else:
                first_seen[color] = position
        return sorted(result)

    def to_dict(self) -> Dict[str, Any]:
        return {"labels": list(self.labels), "num_colors": self.num_colors}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ColorMap":
        return cls(labels=tuple(data["labels"]), num_colors=data["num_colors"])

    def __str__(self):
        return "(" + ",".join(str(color) for color in self.labels) + ")"


@dataclass(frozen=True)
class PaintRank:
    """Generation choices of the painting procedure.

    subset_index ranks the chosen m-subset of colors in the combinatorial number system;
    digits[k-1] picks which adjacent unpainted pair receives the k-th highest chosen color.
    """

    subset_index: int
    digits: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))

    def validate(self, m: int, num_colors: int) -> None:
        """Raise InvalidInputError unless the rank is valid for (m, N)."""
        errors = []
        if len(self.digits) != m:
            errors.append(f"expected {m} digits, got {len(self.digits)}")
        if not 0 <= self.subset_index < comb(num_colors, m):
            errors.append(
                f"subset_index {self.subset_index} outside 0..{comb(num_colors, m) - 1}"
            )
        for k, digit in enumerate(self.digits, start=1):
            bound = 2 * (m - k + 1) - 2
            if not 0 <= digit <= bound:
                errors.append(f"digit {k} = {digit} outside 0..{bound}")
        if errors:
            raise InvalidInputError(f"Invalid paint rank for m={m}, N={num_colors}", errors=errors)


@dataclass(frozen=True)
class ClassFlags:
    """Membership of a pair map in the partition classes."""

    peakless: bool
    noncrossing: bool
    interval: bool
    monotone: bool

    def member_of(self, independence: IndependenceClass) -> bool:
        """Whether the map is counted by the given independence class."""
        if independence is IndependenceClass.COMMUTATIVE:
            return True
        if independence is IndependenceClass.FREE:
            return self.noncrossing
        if independence is IndependenceClass.BOOLEAN:
            return self.interval
        return self.peakless
