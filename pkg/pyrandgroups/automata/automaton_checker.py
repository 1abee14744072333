from typing import TYPE_CHECKING, Iterable, Mapping

if TYPE_CHECKING:
    from pyrandgroups.words import Alphabet


class AutomatonChecker:
    """A class for checking that transition data is well formed over its alphabet."""

    def __init__(self, alphabet: "Alphabet"):
        self.alphabet = alphabet

    def check_subset(self, name: str, letters: Iterable[int]):
        for letter in letters:
            if not self.alphabet.contains(letter):
                raise ValueError(
                    f"{name} contains {letter}, which is not a letter of the alphabet with n={self.alphabet.n}."
                )

    def check_transition_data(self, sigma_empty: Iterable[int], sigma: Mapping[int, Iterable[int]]):
        self.check_subset("sigma_empty", sigma_empty)

        expected = set(self.alphabet.letters)
        keys = set(sigma.keys())
        if keys != expected:
            missing = sorted(expected - keys)
            extra = sorted(keys - expected)
            raise ValueError(
                f"sigma needs exactly one entry per letter of S^±; missing {missing}, unexpected {extra}."
            )
        for letter, targets in sigma.items():
            self.check_subset(f"sigma[{letter}]", targets)
