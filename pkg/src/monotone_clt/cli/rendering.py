"""
Deterministic text rendering for CLI output.

Exact rationals print as decimals when the denominator is of the form 2^a·5^b and as
"p/q" otherwise; floats print with repr so equal values always give equal bytes.
"""

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Sequence, Union

Number = Union[int, Fraction, float]

CONVERGENCE_COLUMNS = ["N", "m", "normalized", "pair_sum", "limit", "abs_error"]


def _decimal_digits(denominator: int) -> int:
    """Digits after the point for 1/denominator, or -1 if it does not terminate."""
    twos = fives = 0
    while denominator % 2 == 0:
        denominator //= 2
        twos += 1
    while denominator % 5 == 0:
        denominator //= 5
        fives += 1
    return max(twos, fives) if denominator == 1 else -1


def format_rational(value: Fraction, rational: bool = False) -> str:
    """Render an exact rational; `rational` forces "p/q" form."""
    value = Fraction(value)
    if rational:
        return f"{value.numerator}/{value.denominator}"
    digits = _decimal_digits(value.denominator)
    if digits < 0:
        return f"{value.numerator}/{value.denominator}"
    if digits == 0:
        return str(value.numerator)

    scaled = abs(value.numerator) * (10 ** digits // value.denominator)
    whole, fraction = divmod(scaled, 10 ** digits)
    sign = "-" if value < 0 else ""
    return f"{sign}{whole}.{str(fraction).zfill(digits).rstrip('0')}"


def format_number(value: Number, rational: bool = False) -> str:
    if isinstance(value, float):
        return "0" if value == 0 else repr(value)
    return format_rational(Fraction(value), rational)


@dataclass(frozen=True)
class ConvergenceRow:
    """One (N, m) line of a CLT convergence table, already rendered."""

    N: int
    m: int
    normalized: str
    pair_sum: str
    limit: str
    abs_error: str

    @classmethod
    def build(cls, num_variables: int, m: int, normalized: Number, pair_sum: Number,
              limit: Fraction, rational: bool = False) -> "ConvergenceRow":
        return cls(
            N=num_variables,
            m=m,
            normalized=format_number(normalized, rational),
            pair_sum=format_number(pair_sum, rational),
            limit=format_number(limit, rational),
            abs_error=format_number(abs(normalized - limit), rational),
        )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def render_json(document: Dict[str, Any]) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_convergence(rows: List[ConvergenceRow], output_format: str,
                       config: Dict[str, Any]) -> str:
    """The table as CSV or as {"config": ..., "rows": [...]} JSON."""
    if output_format == "json":
        return render_json({"config": config, "rows": [row.to_dict() for row in rows]})
    return render_csv(CONVERGENCE_COLUMNS,
                      ([getattr(row, column) for column in CONVERGENCE_COLUMNS] for row in rows))
