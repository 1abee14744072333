"""Tests for letters, words, reduction and the reduced-word sets R_L."""

import unittest
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import stats as scipy_stats

from pyrandgroups.sampler import derive_rng
from pyrandgroups.words import (
    Alphabet,
    Word,
    count_reduced,
    enumerate_reduced,
    inverse,
    is_reduced,
    letter_from_text,
    letter_to_text,
    reduce,
    sample_reduced,
    sample_reduced_batch,
)

letters = st.integers(min_value=1, max_value=3).flatmap(lambda g: st.sampled_from([g, -g]))
words = st.lists(letters, max_size=12).map(lambda items: Word(tuple(items)))


def test_reduce_examples():
    assert reduce(Word.of(1, -1)) == Word.empty()
    assert reduce(Word.of(1, 2, -2, 1)) == Word.of(1, 1)
    assert reduce(Word.of(1, -2, 2, -2)) == Word.of(1, -2)


def test_inverse_examples():
    assert inverse(Word.of(1, 2)) == Word.of(-2, -1)
    assert inverse(Word.empty()) == Word.empty()


@given(words)
def test_inverse_is_an_involution(word):
    assert inverse(inverse(word)) == word


@given(words)
def test_reduce_is_idempotent_and_drops_pairs(word):
    reduced = reduce(word)
    assert is_reduced(reduced)
    assert reduce(reduced) == reduced
    assert len(word) - len(reduced) >= 0
    assert (len(word) - len(reduced)) % 2 == 0


@given(words)
def test_word_times_inverse_reduces_to_empty(word):
    assert reduce(word + inverse(word)).is_empty


def test_text_forms():
    assert Word.from_text("a1 A2 a1") == Word.of(1, -2, 1)
    assert Word.of(3, -1).to_text() == "a3 A1"
    assert Word.empty().to_text() == "e"
    assert Word.from_text("e") == Word.empty()
    assert letter_to_text(-4) == "A4"
    assert letter_from_text("a12") == 12
    with pytest.raises(ValueError):
        letter_from_text("b1")


def test_zero_is_not_a_letter():
    with pytest.raises(ValueError):
        Word.of(1, 0)


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet(0)
    assert Alphabet(3).size == 6
    assert Alphabet(2).letters == (1, -1, 2, -2)
    with pytest.warns(UserWarning):
        Alphabet(1).warn_if_degenerate("test")


def test_indices_follow_enumeration_order():
    alphabet = Alphabet(2)
    assert [alphabet.index_of(letter) for letter in (1, -1, 2, -2)] == [0, 1, 2, 3]
    for index in range(alphabet.size):
        assert alphabet.letter_at(alphabet.inverse_index(index)) == -alphabet.letter_at(index)


class TestReducedWords(unittest.TestCase):
    def test_count_reduced_examples(self):
        self.assertEqual(count_reduced(Alphabet(2), 1), 4)
        self.assertEqual(count_reduced(Alphabet(2), 2), 12)
        self.assertEqual(count_reduced(Alphabet(3), 3), 150)
        self.assertEqual(count_reduced(Alphabet(2), 0), 1)

    def test_count_reduced_closed_form(self):
        for n in range(1, 5):
            for L in range(1, 12):
                with self.subTest(n=n, L=L):
                    self.assertEqual(count_reduced(Alphabet(n), L), 2 * n * (2 * n - 1) ** (L - 1))

    def test_enumeration_matches_count(self):
        for n in range(1, 4):
            for L in range(0, 6):
                with self.subTest(n=n, L=L):
                    stream = list(enumerate_reduced(Alphabet(n), L))
                    self.assertEqual(len(stream), count_reduced(Alphabet(n), L))
                    self.assertEqual(len(set(stream)), len(stream))
                    self.assertTrue(all(word.is_reduced() and len(word) == L for word in stream))

    def test_enumeration_order(self):
        self.assertEqual(
            list(enumerate_reduced(Alphabet(2), 1)),
            [Word.of(1), Word.of(-1), Word.of(2), Word.of(-2)],
        )
        self.assertEqual(list(enumerate_reduced(Alphabet(1), 2)), [Word.of(1, 1), Word.of(-1, -1)])


class TestSampling(unittest.TestCase):
    def test_samples_are_reduced_words_of_length_L(self):
        alphabet = Alphabet(3)
        rows = sample_reduced_batch(alphabet, 9, 500, derive_rng(7))
        self.assertEqual(rows.shape, (500, 9))
        for row in rows:
            word = Word.from_indices(alphabet, row)
            self.assertTrue(word.is_reduced())

    def test_same_seed_same_words(self):
        alphabet = Alphabet(2)
        first = sample_reduced_batch(alphabet, 6, 50, derive_rng(11, 3))
        second = sample_reduced_batch(alphabet, 6, 50, derive_rng(11, 3))
        np.testing.assert_array_equal(first, second)

    def test_single_sample_is_first_row_of_batch(self):
        alphabet = Alphabet(2)
        word = sample_reduced(alphabet, 5, derive_rng(5))
        row = sample_reduced_batch(alphabet, 5, 1, derive_rng(5))[0]
        self.assertEqual(word, Word.from_indices(alphabet, row))

    def test_uniform_over_R_L(self):
        alphabet = Alphabet(2)
        draws = 24_000
        rows = sample_reduced_batch(alphabet, 2, draws, derive_rng(2024))
        observed = Counter(tuple(row) for row in rows.tolist())
        self.assertEqual(len(observed), count_reduced(alphabet, 2))
        expected = draws / count_reduced(alphabet, 2)
        chi_square = sum((count - expected) ** 2 / expected for count in observed.values())
        self.assertLess(chi_square, scipy_stats.chi2.ppf(1 - 1e-6, df=len(observed) - 1))
