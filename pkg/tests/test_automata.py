"""Tests for b-automata: membership, largeness, exact counting and growth."""

import itertools
import math
import unittest
from fractions import Fraction

import numpy as np
import pytest

from pyrandgroups.automata import (
    BAutomaton,
    automata_space_size,
    count_language_reduced,
    count_language_words,
    enumerate_language,
    estimate_growth,
    generator_count_threshold,
    growth_to_density,
    density_to_growth,
    intersection_growth_threshold,
    is_lambda_large,
    language_counts,
    make_full_automaton,
    make_sign_automaton,
    random_automaton,
    random_lambda_large_automaton,
    language_reduced_lower_bound,
    language_word_lower_bound,
)
from pyrandgroups.order import all_sign_vectors
from pyrandgroups.sampler import derive_rng
from pyrandgroups.words import Alphabet, Word, sample_reduced_batch


def _brute_force_counts(automaton: BAutomaton, L: int) -> tuple[int, int]:
    """Count by testing every word of length L, independently of the DP."""
    words = reduced = 0
    for letters in itertools.product(automaton.alphabet.letters, repeat=L):
        word = Word(letters)
        if automaton.accepts(word):
            words += 1
            reduced += word.is_reduced()
    return words, reduced


def _empty_start(n: int) -> BAutomaton:
    return make_full_automaton(Alphabet(n)).with_sigma_empty(())


def test_accepts_examples():
    automaton = make_sign_automaton((1, 1), 1)
    assert automaton.accepts(Word.of(1, 2, 1))
    assert not automaton.accepts(Word.of(2, 1))
    assert not automaton.accepts(Word.empty())
    assert not automaton.accepts(Word.of(1, -2))


def test_sign_automaton_transition_data():
    automaton = make_sign_automaton((1, 1), 1)
    assert automaton.sigma_empty == frozenset({1})
    assert all(targets == frozenset({1, 2}) for targets in automaton.sigma.values())
    flipped = make_sign_automaton((1, -1), 2)
    assert flipped.sigma_empty == frozenset({-2})
    assert flipped.sigma[2] == frozenset({1, -2})


def test_lambda_largeness():
    for n in (2, 3):
        for signs in all_sign_vectors(n):
            for i in range(1, n + 1):
                assert is_lambda_large(make_sign_automaton(signs.signs, i), Fraction(1, 2))

    full = make_full_automaton(Alphabet(2))
    assert is_lambda_large(full, 1)
    assert is_lambda_large(full, "1/3")

    starved = full.with_sigma({1: ()})
    assert not is_lambda_large(starved, Fraction(1, 100))
    assert not is_lambda_large(_empty_start(2), Fraction(1, 100))

    with pytest.raises(ValueError):
        is_lambda_large(full, 0)
    with pytest.raises(ValueError):
        is_lambda_large(full, Fraction(3, 2))


def test_largeness_boundary_is_exact():
    # |sigma_s| = 2 = (1/2) * 4 exactly
    assert is_lambda_large(make_sign_automaton((1, 1), 1), 0.5)
    assert not is_lambda_large(make_sign_automaton((1, 1), 1), "0.5000001")


def test_count_examples():
    full = make_full_automaton(Alphabet(2))
    assert count_language_words(full, 2) == 16
    assert count_language_reduced(full, 2) == 12
    sign = make_sign_automaton((1, 1), 1)
    assert count_language_words(sign, 3) == 4
    assert count_language_reduced(sign, 3) == 4
    assert language_counts(_empty_start(2), 5) == [0, 0, 0, 0, 0]


def test_counts_stay_exact_beyond_int64():
    full = make_full_automaton(Alphabet(3))
    assert count_language_words(full, 40) == 6**40
    assert count_language_reduced(full, 40) == 6 * 5**39


def test_automata_space_size():
    assert automata_space_size(1) == 64
    assert automata_space_size(2) == 1_048_576
    assert automata_space_size(3) == 2**42


class TestCountingOracle(unittest.TestCase):
    def test_random_automata_against_brute_force(self):
        for seed in range(60):
            n = 1 + seed % 2
            automaton = random_automaton(Alphabet(n), derive_rng(seed, 1), fill=0.6)
            words = language_counts(automaton, 5)
            reduced = language_counts(automaton, 5, reduced=True)
            for L in range(1, 6):
                with self.subTest(seed=seed, L=L):
                    self.assertEqual((words[L - 1], reduced[L - 1]), _brute_force_counts(automaton, L))

    def test_random_automata_against_enumeration(self):
        for seed in range(200):
            n = 2 + seed % 2
            automaton = random_automaton(Alphabet(n), derive_rng(seed, 2))
            for L in (1, 4, 6):
                with self.subTest(seed=seed, L=L):
                    self.assertEqual(
                        count_language_words(automaton, L), sum(1 for _ in enumerate_language(automaton, L))
                    )
                    self.assertEqual(
                        count_language_reduced(automaton, L),
                        sum(1 for _ in enumerate_language(automaton, L, reduced=True)),
                    )

    def test_sign_automata_against_enumeration(self):
        for n in (2, 3):
            for signs in all_sign_vectors(n):
                for i in range(1, n + 1):
                    automaton = make_sign_automaton(signs.signs, i)
                    for L in range(1, 9):
                        with self.subTest(signs=signs.to_text(), i=i, L=L):
                            language = list(enumerate_language(automaton, L))
                            self.assertEqual(count_language_words(automaton, L), len(language))
                            self.assertEqual(count_language_reduced(automaton, L), len(language))
                            self.assertEqual(len(language), n ** (L - 1))

    def test_sign_language_is_reduced(self):
        for signs in all_sign_vectors(2):
            for i in (1, 2):
                automaton = make_sign_automaton(signs.signs, i)
                for L in range(1, 7):
                    for word in enumerate_language(automaton, L):
                        self.assertTrue(word.is_reduced())
                        self.assertEqual(word[0], signs.letter(i))

    def test_membership_matches_enumeration(self):
        automaton = random_automaton(Alphabet(2), derive_rng(99))
        language = set(enumerate_language(automaton, 4))
        for letters in itertools.product(Alphabet(2).letters, repeat=4):
            word = Word(letters)
            self.assertEqual(automaton.accepts(word), word in language)

    def test_vectorised_acceptance(self):
        alphabet = Alphabet(2)
        automaton = random_automaton(alphabet, derive_rng(5), fill=0.8)
        rows = sample_reduced_batch(alphabet, 6, 300, derive_rng(6))
        accepted = automaton.accepts_indices(rows)
        expected = [automaton.accepts(Word.from_indices(alphabet, row)) for row in rows]
        np.testing.assert_array_equal(accepted, expected)

    def test_lower_bounds_for_lambda_large_automata(self):
        lam = Fraction(1, 2)
        for seed in range(200):
            automaton = random_lambda_large_automaton(Alphabet(2), lam, derive_rng(seed, 3))
            self.assertTrue(is_lambda_large(automaton, lam))
            words = language_counts(automaton, 8)
            reduced = language_counts(automaton, 8, reduced=True)
            for L in range(1, 9):
                with self.subTest(seed=seed, L=L):
                    self.assertGreaterEqual(words[L - 1], language_word_lower_bound(lam, 2, L))
                    self.assertGreaterEqual(reduced[L - 1], language_reduced_lower_bound(lam, 2, L))


class TestGrowth(unittest.TestCase):
    def test_sign_automaton_grows_like_two(self):
        estimate = estimate_growth(make_sign_automaton((1, 1), 1), 2, 10)
        self.assertEqual(estimate.ratio, 2)
        self.assertFalse(estimate.degenerate)
        self.assertAlmostEqual(estimate.density_lower, math.log(2) / math.log(3), places=12)
        self.assertEqual(estimate.count_basis[-1], (10, 2**9))
        self.assertEqual(estimate.threshold, 2)

    def test_full_automaton_grows_like_2n_minus_1(self):
        estimate = estimate_growth(make_full_automaton(Alphabet(2)), 3, 8)
        self.assertEqual(estimate.ratio, 3)
        self.assertAlmostEqual(estimate.density_lower, 1.0, places=12)
        all_words = estimate_growth(make_full_automaton(Alphabet(2)), 3, 8, reduced=False)
        self.assertEqual(all_words.ratio, 4)

    def test_empty_language_is_degenerate(self):
        estimate = estimate_growth(_empty_start(2), 1, 5)
        self.assertTrue(estimate.degenerate)
        self.assertEqual(estimate.growth_rate_lower, 0.0)
        self.assertIsNone(estimate.density_lower)

    def test_range_validation(self):
        with self.assertRaises(ValueError):
            estimate_growth(make_full_automaton(Alphabet(2)), 5, 5)

    def test_density_duality(self):
        for n in (2, 3, 5):
            for d in (0.1, 0.37, 0.5, 0.9):
                with self.subTest(n=n, d=d):
                    self.assertAlmostEqual(growth_to_density(density_to_growth(d, n), n), d, places=12)
        self.assertIsNone(growth_to_density(2.0, 1))

    def test_thresholds(self):
        self.assertAlmostEqual(intersection_growth_threshold(2, 0.5), math.sqrt(3))
        self.assertEqual(generator_count_threshold(Fraction(1, 2), 0.5), 4)


class TestSerialization(unittest.TestCase):
    def test_round_trip(self):
        automaton = random_automaton(Alphabet(2), derive_rng(17))
        data = automaton.to_dict()
        self.assertEqual(data["__class__"], "BAutomaton")
        self.assertEqual(BAutomaton.from_dict(data), automaton)

    def test_transition_data_must_cover_every_letter(self):
        with self.assertRaises(ValueError):
            BAutomaton.from_sets(Alphabet(2), {1}, {1: {1}, -1: {1}, 2: {1}})
        with self.assertRaises(ValueError):
            BAutomaton.from_sets(Alphabet(1), {2}, {1: {1}, -1: {1}})
