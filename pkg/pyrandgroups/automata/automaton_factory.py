import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from pyrandgroups.words import Alphabet, make_letter
from .b_automaton import BAutomaton
from .largeness import as_rational


def make_sign_automaton(signs: Sequence[int], i: int) -> BAutomaton:
    """A_{eps,i}: start with a_i^{eps_i}, then only letters a_j^{eps_j}.

    It is 1/2-large and every word of its language is reduced.
    """
    alphabet = Alphabet(len(signs))
    if not 1 <= i <= alphabet.n:
        raise ValueError(f"Index i must lie in 1..{alphabet.n}, got {i}.")
    positive = frozenset(make_letter(j + 1, sign) for j, sign in enumerate(signs))
    start = frozenset({make_letter(i, signs[i - 1])})
    return BAutomaton(alphabet, start, {letter: positive for letter in alphabet.letters})


def make_full_automaton(alphabet: Alphabet) -> BAutomaton:
    """Every transition allowed; its language is all non-empty words."""
    everything = frozenset(alphabet.letters)
    return BAutomaton(alphabet, everything, {letter: everything for letter in alphabet.letters})


def random_automaton(alphabet: Alphabet, rng: np.random.Generator, fill: float = 0.5) -> BAutomaton:
    """Each of the 2n(2n+1) membership bits is set independently with probability ``fill``."""
    letters = np.array(alphabet.letters)
    bits = rng.random((alphabet.size + 1, alphabet.size)) < fill
    sigma_empty = frozenset(int(letter) for letter in letters[bits[0]])
    sigma = {
        int(letter): frozenset(int(target) for target in letters[bits[row + 1]])
        for row, letter in enumerate(letters)
    }
    return BAutomaton(alphabet, sigma_empty, sigma)


def random_lambda_large_automaton(
    alphabet: Alphabet, lam: Fraction | float | str, rng: np.random.Generator
) -> BAutomaton:
    """A random lambda-large automaton: every sigma[s] has a random size in [ceil(lam*2n), 2n]."""
    minimum = math.ceil(as_rational(lam) * alphabet.size)
    letters = np.array(alphabet.letters)

    def random_subset(low: int) -> frozenset[int]:
        size = int(rng.integers(low, alphabet.size + 1))
        chosen = rng.choice(letters, size=size, replace=False)
        return frozenset(int(letter) for letter in chosen)

    sigma_empty = random_subset(1)
    sigma = {int(letter): random_subset(minimum) for letter in letters}
    return BAutomaton(alphabet, sigma_empty, sigma)
