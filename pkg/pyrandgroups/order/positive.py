import numpy as np

from pyrandgroups.sampler import Presentation
from pyrandgroups.words import Alphabet, Word
from .sign_vector import SignVector


def uses_only_positive_letters(word: Word, signs: SignVector) -> bool:
    """True iff every letter of ``word`` is some a_j^{eps_j}; vacuously true for the empty word."""
    positive = signs.positive_letters
    return all(letter in positive for letter in word)


def is_positive_witness(word: Word, signs: SignVector, i: int) -> bool:
    """Non-empty, written in positive letters only, with at least one a_i^{eps_i}."""
    return (
        not word.is_empty
        and uses_only_positive_letters(word, signs)
        and signs.letter(i) in word.letters
    )


def find_positive_relator(
    presentation: Presentation, signs: SignVector, i: int
) -> tuple[int, Word] | None:
    """The first relator (tuple order) that is a positive witness for (eps, i)."""
    if signs.n != presentation.n:
        raise ValueError(
            f"Sign vector has {signs.n} signs but the presentation has n={presentation.n}."
        )
    for index, relator in enumerate(presentation.relators):
        if is_positive_witness(relator, signs, i):
            return index, relator
    return None


def positive_witness_mask(
    rows: np.ndarray, alphabet: Alphabet, signs: SignVector, i: int
) -> np.ndarray:
    """Vectorised :func:`is_positive_witness` over a (count x L) array of letter indices."""
    positive = np.zeros(alphabet.size, dtype=bool)
    for letter in signs.positive_letters:
        positive[alphabet.index_of(letter)] = True
    target = alphabet.index_of(signs.letter(i))
    rows = np.asarray(rows)
    return positive[rows].all(axis=1) & (rows == target).any(axis=1)
