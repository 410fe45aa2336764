"""
Data models for the moment engine.

Variables are formal: a MomentSequence stands for the state applied to powers of one
variable, and words are sequences of variable indices.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Tuple, Union

from ..combinatorics.models import IndependenceClass
from ..exceptions import InsufficientMomentsError, InvalidInputError

RationalLike = Union[int, str, Fraction]


@dataclass(frozen=True)
class MomentSequence:
    """Moments μ_0..μ_K of one variable as exact rationals; μ_0 = 1."""

    moments: Tuple[Fraction, ...]

    def __post_init__(self):
        moments = tuple(Fraction(value) for value in self.moments)
        object.__setattr__(self, "moments", moments)
        if not moments:
            raise InvalidInputError("A moment sequence needs at least μ_0")
        if moments[0] != 1:
            raise InvalidInputError(f"The state must be unital: μ_0 = {moments[0]}, expected 1")

    @property
    def max_order(self) -> int:
        return len(self.moments) - 1

    def moment(self, order: int, color: int = 0) -> Fraction:
        """μ_order; `color` only labels the error."""
        if order > self.max_order:
            raise InsufficientMomentsError(color, order, self.max_order)
        return self.moments[order]

    @property
    def is_standardized(self) -> bool:
        """μ_1 = 0 and μ_2 = 1."""
        return self.max_order >= 2 and self.moments[1] == 0 and self.moments[2] == 1

    @property
    def is_symmetric(self) -> bool:
        """All odd moments vanish."""
        return all(value == 0 for value in self.moments[1::2])

    @classmethod
    def bernoulli(cls, max_order: int) -> "MomentSequence":
        """Symmetric ±1 variable: μ_k = 1 for even k, 0 for odd k."""
        if max_order < 0:
            raise InvalidInputError(f"max_order must be nonnegative, got {max_order}")
        return cls(tuple(Fraction(1 - k % 2) for k in range(max_order + 1)))

    @classmethod
    def from_strings(cls, values: Iterable[RationalLike]) -> "MomentSequence":
        """Build from integers, Fractions or "p/q" strings."""
        parsed = []
        for index, value in enumerate(values):
            try:
                parsed.append(Fraction(value))
            except (ValueError, ZeroDivisionError) as e:
                raise InvalidInputError(f"Moment {index} is not a rational: {value!r} ({e})")
        return cls(tuple(parsed))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "MomentSequence":
        """Create from the moment-file document {"max_order": K, "moments": [...]}."""
        sequence = cls.from_strings(data["moments"])
        if sequence.max_order != data["max_order"]:
            raise InvalidInputError(
                f"max_order is {data['max_order']} but {len(sequence.moments)} moments were given"
            )
        return sequence

    def to_dict(self) -> Dict[str, Any]:
        return {"max_order": self.max_order, "moments": [str(value) for value in self.moments]}


@dataclass(frozen=True)
class Word:
    """A sequence of variable indices j -> λ_j."""

    colors: Tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))
        bad = [color for color in self.colors if not isinstance(color, int) or color < 1]
        if bad:
            raise InvalidInputError(f"Word letters must be positive integers, got {bad}")

    def __len__(self):
        return len(self.colors)

    def multiplicities(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for color in self.colors:
            counts[color] = counts.get(color, 0) + 1
        return counts

    def without(self, position: int) -> "Word":
        """Delete the letter at a 1-based position."""
        return Word(self.colors[:position - 1] + self.colors[position:])


@dataclass(frozen=True)
class BlockWord:
    """Run-length merged word: (color, power) blocks with distinct neighbouring colors."""

    blocks: Tuple[Tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(block) for block in self.blocks))
        for index, (color, power) in enumerate(self.blocks):
            if power < 1:
                raise InvalidInputError(f"Block {index + 1} has power {power}")
            if index and self.blocks[index - 1][0] == color:
                raise InvalidInputError(f"Blocks {index} and {index + 1} share color {color}")

    def __len__(self):
        return len(self.blocks)

    def expand(self) -> Word:
        return Word(tuple(color for color, power in self.blocks for _ in range(power)))

    @property
    def colors(self) -> List[int]:
        return [color for color, _ in self.blocks]


@dataclass(frozen=True)
class LimitMoments:
    """The sequence M_0..M_K of CLT limit moments for one independence class."""

    independence: IndependenceClass
    values: Tuple[Fraction, ...]

    def __getitem__(self, order: int) -> Fraction:
        return self.values[order]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "class": self.independence.value,
            "values": [str(value) for value in self.values],
        }


def as_word(word: Union[Word, Sequence[int]]) -> Word:
    return word if isinstance(word, Word) else Word(tuple(word))
