"""
Unit tests for central limit moments of the four independence classes.
"""

from fractions import Fraction

import pytest

from src.monotone_clt.combinatorics.counting import count_peakless
from src.monotone_clt.combinatorics.models import IndependenceClass
from src.monotone_clt.exceptions import InvalidInputError
from src.monotone_clt.moment_engine.limits import limit_moment, limit_moments


class TestLimitMoment:
    @pytest.mark.parametrize("independence,expected", [
        ("monotone", [1, 0, 1, 0, Fraction(3, 2), 0, Fraction(5, 2), 0, Fraction(35, 8)]),
        ("commutative", [1, 0, 1, 0, 3, 0, 15, 0, 105]),
        ("free", [1, 0, 1, 0, 2, 0, 5, 0, 14]),
        ("boolean", [1, 0, 1, 0, 1, 0, 1, 0, 1]),
    ])
    def test_first_moments(self, independence, expected):
        assert [limit_moment(m, independence) for m in range(9)] == expected

    @pytest.mark.parametrize("m", range(1, 5))
    def test_monotone_limit_from_peakless_counts(self, m):
        n = 1000
        scaled = Fraction(count_peakless(m, n), n ** m)
        limit = limit_moment(2 * m, IndependenceClass.MONOTONE)
        assert abs(scaled - limit) / limit < Fraction(2 * m * m, n)

    def test_unknown_class(self):
        with pytest.raises(InvalidInputError):
            limit_moment(2, "tensor")

    def test_negative_order(self):
        with pytest.raises(InvalidInputError):
            limit_moment(-2, "free")


class TestLimitMoments:
    def test_table(self):
        table = limit_moments("free", 6)
        assert table.independence is IndependenceClass.FREE
        assert table[6] == 5
        assert table.to_dict() == {"class": "free", "values": ["1", "0", "1", "0", "2", "0", "5"]}

    def test_negative_max_order(self):
        with pytest.raises(InvalidInputError):
            limit_moments("boolean", -1)
