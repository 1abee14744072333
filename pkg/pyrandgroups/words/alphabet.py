import warnings
from dataclasses import dataclass
from functools import cached_property

# Letters are signed integers: ``k`` is the generator a_k and ``-k`` its formal inverse.
Letter = int


def make_letter(generator: int, sign: int) -> Letter:
    """Encode ``a_generator ** sign`` as a signed integer."""
    if generator < 1:
        raise ValueError(f"Generator index must be at least 1, got {generator}.")
    if sign not in (1, -1):
        raise ValueError(f"Letter sign must be 1 or -1, got {sign}.")
    return generator * sign


def letter_to_text(letter: Letter) -> str:
    """``a3`` for a_3 and ``A3`` for its inverse."""
    return f"a{letter}" if letter > 0 else f"A{-letter}"


def letter_from_text(text: str) -> Letter:
    if len(text) < 2 or text[0] not in "aA" or not text[1:].isdigit():
        raise ValueError(f"Cannot parse letter {text!r}; expected forms like 'a3' or 'A3'.")
    generator = int(text[1:])
    return make_letter(generator, 1 if text[0] == "a" else -1)


@dataclass(frozen=True)
class Alphabet:
    """The generating set S = {a_1, ..., a_n} together with its letters S^±.

    Letters are indexed ``0 .. 2n-1`` in the fixed enumeration order
    a_1, a_1^-1, a_2, a_2^-1, ... (generator first, sign +1 before -1).
    """

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"An alphabet needs at least one generator, got n={self.n}.")

    @property
    def size(self) -> int:
        """Number of letters, 2n."""
        return 2 * self.n

    @property
    def is_degenerate(self) -> bool:
        """True for n = 1; the density results need n >= 2."""
        return self.n < 2

    def warn_if_degenerate(self, context: str):
        if self.is_degenerate:
            warnings.warn(
                f"{context}: n=1 is a degenerate case, results about random groups need n >= 2.",
                UserWarning,
            )

    @cached_property
    def letters(self) -> tuple[Letter, ...]:
        """All letters in enumeration order."""
        return tuple(
            make_letter(generator, sign)
            for generator in range(1, self.n + 1)
            for sign in (1, -1)
        )

    def index_of(self, letter: Letter) -> int:
        self.check_letter(letter)
        return 2 * (abs(letter) - 1) + (0 if letter > 0 else 1)

    def letter_at(self, index: int) -> Letter:
        if not 0 <= index < self.size:
            raise ValueError(f"Letter index {index} is out of range for n={self.n}.")
        return self.letters[index]

    def inverse_index(self, index: int) -> int:
        """Index of the inverse letter; flips the lowest bit."""
        return index ^ 1

    def contains(self, letter: Letter) -> bool:
        return letter != 0 and abs(letter) <= self.n

    def __contains__(self, letter: Letter) -> bool:
        return self.contains(letter)

    def check_letter(self, letter: Letter):
        if not self.contains(letter):
            raise ValueError(f"Letter {letter} does not belong to the alphabet with n={self.n}.")
