from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence, overload

import numpy as np

from pyrandgroups.errors import InvalidWordError

from .alphabet import Alphabet, Letter, letter_from_text, letter_to_text


@dataclass(frozen=True, order=True)
class Word:
    """A finite, possibly empty, sequence of letters. Not necessarily reduced."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        for letter in self.letters:
            if isinstance(letter, (bool, np.bool_)) or not isinstance(letter, (int, np.integer)):
                raise InvalidWordError(f"Letters must be nonzero integers, got {letter!r}.")
        letters = tuple(int(letter) for letter in self.letters)
        if any(letter == 0 for letter in letters):
            raise ValueError("0 is not a letter; use k for a_k and -k for its inverse.")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *letters: Letter) -> "Word":
        return cls(tuple(letters))

    @classmethod
    def empty(cls) -> "Word":
        return cls(())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    @overload
    def __getitem__(self, item: int) -> Letter: ...

    @overload
    def __getitem__(self, item: slice) -> "Word": ...

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return self.to_text()

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def prefix(self, length: int) -> "Word":
        return Word(self.letters[:length])

    def suffix(self, length: int) -> "Word":
        if length == 0:
            return Word()
        return Word(self.letters[-length:])

    def is_reduced(self) -> bool:
        """A word is reduced iff no letter is followed by its inverse."""
        return all(a != -b for a, b in zip(self.letters, self.letters[1:]))

    def reduce(self) -> "Word":
        """Free reduction, done with a stack in a single pass."""
        stack: list[Letter] = []
        for letter in self.letters:
            if stack and stack[-1] == -letter:
                stack.pop()
            else:
                stack.append(letter)
        return Word(tuple(stack))

    def inverse(self) -> "Word":
        return Word(tuple(-letter for letter in reversed(self.letters)))

    def uses_alphabet(self, alphabet: Alphabet) -> bool:
        return all(alphabet.contains(letter) for letter in self.letters)

    def check_alphabet(self, alphabet: Alphabet):
        for letter in self.letters:
            alphabet.check_letter(letter)

    def to_list(self) -> list[int]:
        return list(self.letters)

    @classmethod
    def from_list(cls, data: Iterable[int]) -> "Word":
        return cls(tuple(data))

    def to_text(self) -> str:
        """Space separated letters, ``e`` for the empty word."""
        if not self.letters:
            return "e"
        return " ".join(letter_to_text(letter) for letter in self.letters)

    @classmethod
    def from_text(cls, text: str) -> "Word":
        tokens = text.split()
        if tokens == ["e"]:
            return cls()
        return cls(tuple(letter_from_text(token) for token in tokens))

    def to_indices(self, alphabet: Alphabet) -> list[int]:
        return [alphabet.index_of(letter) for letter in self.letters]

    @classmethod
    def from_indices(cls, alphabet: Alphabet, indices: Sequence[int]) -> "Word":
        return cls(tuple(alphabet.letters[int(index)] for index in indices))


def reduce(word: Word) -> Word:
    return word.reduce()


def inverse(word: Word) -> Word:
    return word.inverse()


def is_reduced(word: Word) -> bool:
    return word.is_reduced()
