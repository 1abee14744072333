from typing import Iterator

import numpy as np

from pyrandgroups.words import Word
from .b_automaton import BAutomaton


def _exact(array: np.ndarray) -> np.ndarray:
    """Object-dtype copy holding Python ints, so products never overflow."""
    return array.astype(np.int64).astype(object)


def language_counts(automaton: BAutomaton, max_length: int, reduced: bool = False) -> list[int]:
    """Exact language sizes for lengths 1..max_length, by DP over the last letter read.

    ``counts[L-1]`` is the number of length-L words; with ``reduced=True`` only
    reduced words are counted. Each step costs O((2n)^2).
    """
    if max_length < 1:
        raise ValueError(f"Lengths start at 1, got max_length={max_length}.")

    matrix = automaton.reduced_transition_matrix if reduced else automaton.transition_matrix
    transitions = _exact(matrix)
    vector = _exact(automaton.start_mask)

    counts = [int(vector.sum())]
    for _ in range(max_length - 1):
        vector = np.dot(vector, transitions)
        counts.append(int(vector.sum()))
    return counts


def count_language_words(automaton: BAutomaton, L: int) -> int:
    """Number of length-L words in the language."""
    return language_counts(automaton, L)[-1]


def count_language_reduced(automaton: BAutomaton, L: int) -> int:
    """Number of reduced length-L words in the language."""
    return language_counts(automaton, L, reduced=True)[-1]


def enumerate_language(automaton: BAutomaton, L: int, reduced: bool = False) -> Iterator[Word]:
    """Brute-force stream of the length-L language, in the enumeration order of ``words``."""
    if L < 1:
        return

    alphabet = automaton.alphabet
    letters: list[int] = []

    def extend() -> Iterator[Word]:
        if len(letters) == L:
            yield Word(tuple(letters))
            return
        allowed = automaton.sigma_empty if not letters else automaton.sigma[letters[-1]]
        for letter in alphabet.letters:
            if letter not in allowed:
                continue
            if reduced and letters and letter == -letters[-1]:
                continue
            letters.append(letter)
            yield from extend()
            letters.pop()

    yield from extend()


def automata_space_size(n: int) -> int:
    """There are exactly 2^(2n(2n+1)) b-automata over an alphabet of n generators."""
    if n < 1:
        raise ValueError(f"Generator count must be at least 1, got {n}.")
    return 2 ** (2 * n * (2 * n + 1))
