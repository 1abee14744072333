from typing import Iterator

import numpy as np

from .alphabet import Alphabet
from .word import Word


def count_reduced(alphabet: Alphabet, length: int) -> int:
    """|R_L| = 2n(2n-1)^(L-1) for L >= 1, and 1 for the empty word."""
    if length < 0:
        raise ValueError(f"Word length must be non-negative, got {length}.")
    if length == 0:
        return 1
    return alphabet.size * (alphabet.size - 1) ** (length - 1)


def enumerate_reduced(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """Yield every reduced word of the given length exactly once.

    Order is lexicographic over letter indices, i.e. by (generator, sign)
    with sign +1 before -1.
    """
    if length < 0:
        raise ValueError(f"Word length must be non-negative, got {length}.")

    indices = [0] * length

    def extend(position: int) -> Iterator[Word]:
        if position == length:
            yield Word.from_indices(alphabet, indices)
            return
        for index in range(alphabet.size):
            if position > 0 and index == alphabet.inverse_index(indices[position - 1]):
                continue
            indices[position] = index
            yield from extend(position + 1)

    yield from extend(0)


def sample_reduced_batch(
    alphabet: Alphabet, length: int, count: int, rng: np.random.Generator
) -> np.ndarray:
    """Draw ``count`` independent uniform elements of R_L as rows of letter indices.

    The first letter is uniform over the 2n letters, every later one uniform
    over the 2n-1 letters that do not cancel its predecessor.
    """
    if length < 1:
        raise ValueError(f"Sampled words need length at least 1, got {length}.")
    if count < 0:
        raise ValueError(f"Sample count must be non-negative, got {count}.")

    draws = np.empty((count, length), dtype=np.int64)
    draws[:, 0] = rng.integers(0, alphabet.size, size=count)
    if length > 1:
        offsets = rng.integers(0, alphabet.size - 1, size=(count, length - 1))
        for position in range(1, length):
            forbidden = draws[:, position - 1] ^ 1
            candidate = offsets[:, position - 1]
            draws[:, position] = candidate + (candidate >= forbidden)
    return draws


def sample_reduced(alphabet: Alphabet, length: int, rng: np.random.Generator) -> Word:
    """One uniform element of R_L; the ``count=1`` case of :func:`sample_reduced_batch`."""
    row = sample_reduced_batch(alphabet, length, 1, rng)[0]
    return Word.from_indices(alphabet, row)


def words_from_indices(alphabet: Alphabet, rows: np.ndarray) -> list[Word]:
    return [Word.from_indices(alphabet, row) for row in rows]
