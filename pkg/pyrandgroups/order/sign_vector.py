import itertools
from dataclasses import dataclass
from typing import Iterator

from pyrandgroups.words import Letter, make_letter


@dataclass(frozen=True, order=True)
class SignVector:
    """Signs eps_1..eps_n; the letters a_j^{eps_j} play the role of positive elements."""

    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(sign) for sign in self.signs)
        if not signs:
            raise ValueError("A sign vector needs at least one sign.")
        for sign in signs:
            if sign not in (1, -1):
                raise ValueError(f"Signs must be 1 or -1, got {sign}.")
        object.__setattr__(self, "signs", signs)

    @property
    def n(self) -> int:
        return len(self.signs)

    def letter(self, i: int) -> Letter:
        """a_i^{eps_i}."""
        if not 1 <= i <= self.n:
            raise ValueError(f"Index i must lie in 1..{self.n}, got {i}.")
        return make_letter(i, self.signs[i - 1])

    @property
    def positive_letters(self) -> frozenset[Letter]:
        return frozenset(self.letter(i) for i in range(1, self.n + 1))

    def flipped(self) -> "SignVector":
        return SignVector(tuple(-sign for sign in self.signs))

    def to_text(self) -> str:
        return "".join("+" if sign > 0 else "-" for sign in self.signs)

    @classmethod
    def from_text(cls, text: str) -> "SignVector":
        if not text or any(char not in "+-" for char in text):
            raise ValueError(f"Cannot parse sign vector {text!r}; expected a string like '+-+'.")
        return cls(tuple(1 if char == "+" else -1 for char in text))

    def __str__(self) -> str:
        return self.to_text()


def all_sign_vectors(n: int) -> Iterator[SignVector]:
    """{+1,-1}^n in lexicographic order with +1 before -1."""
    for signs in itertools.product((1, -1), repeat=n):
        yield SignVector(signs)


def all_sign_pairs(n: int) -> Iterator[tuple[SignVector, int]]:
    """Every (eps, i) in the order the certifier searches them."""
    for signs in all_sign_vectors(n):
        for i in range(1, n + 1):
            yield signs, i
