from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

import numpy as np

from pyrandgroups.words import Alphabet, Letter, Word
from .automaton_checker import AutomatonChecker


@dataclass(frozen=True)
class BAutomaton:
    """A b-automaton: transition data sigma_empty and sigma[s] for every letter s.

    Its language is every non-empty word starting with a letter of
    ``sigma_empty`` in which each letter s is followed by a letter of ``sigma[s]``.
    """

    alphabet: Alphabet
    sigma_empty: frozenset[Letter]
    sigma: Mapping[Letter, frozenset[Letter]]

    def __post_init__(self):
        object.__setattr__(self, "sigma_empty", frozenset(self.sigma_empty))
        object.__setattr__(
            self,
            "sigma",
            {int(letter): frozenset(targets) for letter, targets in self.sigma.items()},
        )
        AutomatonChecker(self.alphabet).check_transition_data(self.sigma_empty, self.sigma)

    def __hash__(self):
        return hash(
            (
                self.alphabet,
                self.sigma_empty,
                tuple(self.sigma[letter] for letter in self.alphabet.letters),
            )
        )

    @classmethod
    def from_sets(
        cls,
        alphabet: Alphabet,
        sigma_empty: Iterable[Letter],
        sigma: Mapping[Letter, Iterable[Letter]],
    ) -> "BAutomaton":
        return cls(
            alphabet,
            frozenset(sigma_empty),
            {letter: frozenset(targets) for letter, targets in sigma.items()},
        )

    def with_sigma_empty(self, sigma_empty: Iterable[Letter]) -> "BAutomaton":
        return BAutomaton(self.alphabet, frozenset(sigma_empty), self.sigma)

    def with_sigma(self, updates: Mapping[Letter, Iterable[Letter]]) -> "BAutomaton":
        sigma = dict(self.sigma)
        sigma.update({letter: frozenset(targets) for letter, targets in updates.items()})
        return BAutomaton(self.alphabet, self.sigma_empty, sigma)

    @cached_property
    def start_mask(self) -> np.ndarray:
        """Boolean vector over letter indices: may the word start with this letter."""
        mask = np.zeros(self.alphabet.size, dtype=bool)
        for letter in self.sigma_empty:
            mask[self.alphabet.index_of(letter)] = True
        return mask

    @cached_property
    def transition_matrix(self) -> np.ndarray:
        """``matrix[i, j]`` is True iff letter j may follow letter i."""
        matrix = np.zeros((self.alphabet.size, self.alphabet.size), dtype=bool)
        for letter, targets in self.sigma.items():
            row = self.alphabet.index_of(letter)
            for target in targets:
                matrix[row, self.alphabet.index_of(target)] = True
        return matrix

    @cached_property
    def reduced_transition_matrix(self) -> np.ndarray:
        """The transition matrix with every cancelling transition s -> s^-1 removed."""
        matrix = self.transition_matrix.copy()
        indices = np.arange(self.alphabet.size)
        matrix[indices, indices ^ 1] = False
        return matrix

    def accepts(self, word: Word) -> bool:
        """Language membership. The empty word is never in a language."""
        if word.is_empty or not word.uses_alphabet(self.alphabet):
            return False
        if word[0] not in self.sigma_empty:
            return False
        return all(b in self.sigma[a] for a, b in zip(word.letters, word.letters[1:]))

    def accepts_indices(self, rows: np.ndarray) -> np.ndarray:
        """Vectorised :meth:`accepts` over a (count x L) array of letter indices, L >= 1."""
        rows = np.asarray(rows)
        if rows.ndim != 2 or rows.shape[1] == 0:
            raise ValueError(f"Expected a non-empty (count x L) index array, got shape {rows.shape}.")
        accepted = self.start_mask[rows[:, 0]]
        if rows.shape[1] > 1:
            steps = self.transition_matrix[rows[:, :-1], rows[:, 1:]]
            accepted = accepted & steps.all(axis=1)
        return accepted

    def to_dict(self):
        """Serialize the automaton; letters are signed integers, sets are sorted."""
        return {
            "__class__": "BAutomaton",
            "n": self.alphabet.n,
            "sigma_empty": sorted(self.sigma_empty),
            "sigma": {str(letter): sorted(self.sigma[letter]) for letter in self.alphabet.letters},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "BAutomaton":
        alphabet = Alphabet(int(data["n"]))
        return cls.from_sets(
            alphabet,
            data["sigma_empty"],
            {int(letter): targets for letter, targets in data["sigma"].items()},
        )
