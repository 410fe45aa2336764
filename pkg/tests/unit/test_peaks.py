"""
Unit tests for peak detection and peaklessness.
"""

import pytest

from src.monotone_clt.combinatorics.models import ColorMap
from src.monotone_clt.combinatorics.peaks import (is_peakless, peaks, remove_top_block,
                                                  top_pair_adjacent)
from src.monotone_clt.exceptions import InvalidInputError


class TestPeaks:
    """Test cases for the peaks function."""

    @pytest.mark.parametrize("labels,expected", [
        ((1, 3, 2), {2}),
        ((2, 1, 2), {1, 3}),
        ((1, 1), set()),
        ((5,), {1}),
        ((1, 2, 2, 1), set()),
        ((3, 1, 2, 1, 3), {1, 3, 5}),
    ])
    def test_peak_positions(self, labels, expected):
        assert peaks(labels) == frozenset(expected)

    def test_equal_neighbours_are_not_peaks(self):
        assert peaks((2, 2)) == frozenset()

    def test_empty_sequence_rejected(self):
        with pytest.raises(InvalidInputError):
            peaks(())


class TestIsPeakless:
    """Test cases for hereditary peaklessness."""

    @pytest.mark.parametrize("labels", [
        (1, 1),
        (1, 2, 2, 1),
        (1, 1, 2, 2),
        (2, 2, 1, 1),
        (1, 2, 3, 3, 2, 1),
        (1, 2, 2, 3, 3, 1),
    ])
    def test_peakless_maps(self, labels):
        assert is_peakless(ColorMap(labels, max(labels)))

    @pytest.mark.parametrize("labels", [
        (2, 1, 1, 2),
        (1, 2, 1, 2),
        (2, 1, 2, 1),
    ])
    def test_maps_with_a_peak(self, labels):
        assert not is_peakless(ColorMap(labels, 2))

    def test_peak_that_appears_after_deleting_the_top_pair(self):
        # No peak in the full sequence, but (1,2,1,3,3,2) exposes 2 at position 2.
        f = ColorMap((1, 2, 4, 4, 1, 3, 3, 2), 4)
        assert peaks(f.labels) == frozenset()
        assert not is_peakless(f)


class TestRemoveTopBlock:
    """Test cases for the restriction step."""

    def test_removes_adjacent_top_pair(self):
        restricted, position = remove_top_block(ColorMap((1, 3, 3, 1), 3))
        assert restricted == ColorMap((1, 1), 2)
        assert position == 2

    def test_color_range_kept_when_top_is_not_largest(self):
        restricted, position = remove_top_block(ColorMap((2, 2, 1, 1), 3))
        assert restricted == ColorMap((1, 1), 3)
        assert position == 1

    def test_non_adjacent_top_pair_rejected(self):
        with pytest.raises(InvalidInputError) as exc_info:
            remove_top_block(ColorMap((2, 1, 1, 2), 2))
        assert "not adjacent" in str(exc_info.value)

    def test_empty_map_rejected(self):
        with pytest.raises(InvalidInputError):
            remove_top_block(ColorMap((), 1))

    def test_top_pair_adjacent(self):
        assert top_pair_adjacent(ColorMap((1, 2, 2, 1), 2))
        assert not top_pair_adjacent(ColorMap((2, 1, 1, 2), 2))


class TestColorMap:
    """Test cases for the ColorMap model."""

    def test_blocks_ordered_by_left_end(self):
        f = ColorMap((2, 1, 1, 2), 2)
        assert f.blocks() == [(1, 4, 2), (2, 3, 1)]
        assert f.m == 2
        assert f.colors == (1, 2)

    def test_invalid_map_collects_errors(self):
        with pytest.raises(InvalidInputError) as exc_info:
            ColorMap((1, 1, 1, 4), 3)
        errors = exc_info.value.errors
        assert any("outside 1..3" in error for error in errors)
        assert any("color 1 occurs 3 times" in error for error in errors)

    def test_dict_round_trip(self):
        f = ColorMap((1, 2, 2, 1), 3)
        assert ColorMap.from_dict(f.to_dict()) == f
        assert str(f) == "(1,2,2,1)"
