"""
Unit tests for monotone mixed-moment reduction.
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from src.monotone_clt.combinatorics.enumeration import enumerate_pair_maps
from src.monotone_clt.combinatorics.models import ColorMap
from src.monotone_clt.combinatorics.peaks import is_peakless
from src.monotone_clt.exceptions import InsufficientMomentsError, InvalidInputError
from src.monotone_clt.moment_engine.models import BlockWord, MomentSequence, Word
from src.monotone_clt.moment_engine.reduction import (merge_runs, pair_partition_weight,
                                                      random_peak_strategy, reduce_monotone,
                                                      reduce_monotone_with, verify_singleton)

GENERIC = MomentSequence.from_strings(["1", "1/2", "2", "-1/3", "5", "1/7", "3", "2/5", "11"])

words = st.lists(st.integers(1, 5), max_size=8)


@st.composite
def singleton_words(draw):
    """A word with at least one color occurring exactly once, and that position."""
    singleton = draw(st.integers(1, 9))
    rest = draw(st.lists(st.integers(1, 9).filter(lambda c: c != singleton), max_size=7))
    position = draw(st.integers(1, len(rest) + 1))
    return tuple(rest[:position - 1]) + (singleton,) + tuple(rest[position - 1:]), position


class TestMergeRuns:
    def test_runs_collapse(self):
        assert merge_runs((1, 1, 2, 1, 3, 3, 3)) == BlockWord(((1, 2), (2, 1), (1, 1), (3, 3)))

    def test_expand_inverts_merge(self):
        word = Word((2, 2, 1, 2))
        assert merge_runs(word).expand() == word

    def test_neighbouring_blocks_must_differ(self):
        with pytest.raises(InvalidInputError):
            BlockWord(((1, 1), (1, 2)))


class TestReduceMonotone:
    """Test cases for reduce_monotone."""

    def test_empty_word_is_one(self):
        assert reduce_monotone((), GENERIC) == 1

    def test_single_run_is_a_moment(self):
        assert reduce_monotone((3, 3, 3), GENERIC) == Fraction(-1, 3)

    def test_higher_index_in_the_middle_factors_out(self):
        # φ(a1 a2 a1) = φ(a2) φ(a1²)
        assert reduce_monotone((1, 2, 1), GENERIC) == Fraction(1, 2) * 2

    def test_higher_index_outside(self):
        # φ(a2 a1 a2) = φ(a2) φ(a1) φ(a2)
        assert reduce_monotone((2, 1, 2), GENERIC) == Fraction(1, 8)

    def test_per_variable_sequences(self, bernoulli):
        moments = {1: bernoulli, 2: GENERIC}
        assert reduce_monotone((1, 2, 2, 1), moments) == 2

    def test_missing_variable_sequence(self, bernoulli):
        with pytest.raises(InvalidInputError):
            reduce_monotone((1, 2), {1: bernoulli})

    def test_insufficient_moments(self):
        with pytest.raises(InsufficientMomentsError) as exc_info:
            reduce_monotone((1, 2, 1, 1), MomentSequence.bernoulli(2))
        assert exc_info.value.color == 1
        assert exc_info.value.required_order == 3
        assert exc_info.value.available_order == 2

    def test_invalid_letters(self):
        with pytest.raises(InvalidInputError):
            reduce_monotone((1, 0), GENERIC)

    @given(words, st.integers(0, 2 ** 32))
    def test_peak_choice_does_not_matter(self, word, seed):
        chooser = random_peak_strategy(random.Random(seed))
        assert reduce_monotone_with(word, GENERIC, chooser) == reduce_monotone(word, GENERIC)


class TestSingletonCondition:
    """Test cases for factoring out a singleton variable."""

    @given(singleton_words())
    def test_singleton_factors(self, args):
        word, position = args
        assert verify_singleton(word, position, GENERIC)

    @given(singleton_words())
    def test_centred_singleton_vanishes(self, args):
        word, _ = args
        assert reduce_monotone(word, MomentSequence.bernoulli(8)) == 0

    def test_position_must_be_a_singleton(self):
        with pytest.raises(InvalidInputError):
            verify_singleton((1, 2, 1), 1, GENERIC)

    def test_position_out_of_range(self):
        with pytest.raises(InvalidInputError):
            verify_singleton((1, 2), 3, GENERIC)


class TestPairPartitionWeight:
    """Test cases for pair-partition weights."""

    def test_peakless_map_weighs_one(self, bernoulli):
        assert pair_partition_weight(ColorMap((1, 2, 2, 1), 2), bernoulli) == 1

    def test_map_with_a_peak_weighs_zero(self, bernoulli):
        assert pair_partition_weight(ColorMap((1, 2, 1, 2), 2), bernoulli) == 0

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 5) for n in range(m, 6)])
    def test_contribution_dichotomy(self, m, n, bernoulli):
        for f in enumerate_pair_maps(m, n):
            assert pair_partition_weight(f, bernoulli) == (1 if is_peakless(f) else 0), str(f)

    def test_needs_second_moments(self):
        with pytest.raises(InvalidInputError):
            pair_partition_weight(ColorMap((1, 1), 1), MomentSequence.bernoulli(1))
