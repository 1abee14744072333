from dataclasses import dataclass, field
from functools import cached_property

from pyrandgroups.errors import BudgetExceededError, InvalidWordError
from pyrandgroups.words import Alphabet, Letter, Word, count_reduced, enumerate_reduced

DEFAULT_BLOCK_BUDGET = 10**6
PARTITION_RULE = "precedes-inverse"


@dataclass(frozen=True)
class BlockAlphabet:
    """The alphabet S-hat whose letters are reduced words of length B over ``base``.

    Reduced length-B words come in inverse pairs; the one that comes first in the
    enumeration order of ``enumerate_reduced`` is the positive block letter.
    Block letter ``k`` (1-based) stands for ``positive_part[k - 1]`` and ``-k``
    for its inverse.
    """

    base: Alphabet
    B: int
    budget: int = field(default=DEFAULT_BLOCK_BUDGET, compare=False)

    def __post_init__(self):
        if self.B < 1:
            raise ValueError(f"Block length must be at least 1, got B={self.B}.")
        table_size = count_reduced(self.base, self.B)
        if table_size > self.budget:
            raise BudgetExceededError(
                f"Block alphabet for n={self.base.n}, B={self.B} has {table_size} words, "
                f"above the budget {self.budget}."
            )

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def n_hat(self) -> int:
        return self.n * (2 * self.n - 1) ** (self.B - 1)

    @property
    def partition_rule(self) -> str:
        return PARTITION_RULE

    @cached_property
    def hat_alphabet(self) -> Alphabet:
        return Alphabet(self.n_hat)

    @cached_property
    def positive_part(self) -> tuple[Word, ...]:
        order = {}
        for position, word in enumerate(enumerate_reduced(self.base, self.B)):
            order[word] = position
        return tuple(word for word, position in order.items() if position < order[word.inverse()])

    @cached_property
    def _letter_of(self) -> dict[Word, Letter]:
        lookup = {}
        for k, word in enumerate(self.positive_part, start=1):
            lookup[word] = k
            lookup[word.inverse()] = -k
        return lookup

    @cached_property
    def _by_first_letter(self) -> dict[Letter, frozenset[Letter]]:
        groups = {letter: set() for letter in self.base.letters}
        for word, block_letter in self._letter_of.items():
            groups[word[0]].add(block_letter)
        return {letter: frozenset(members) for letter, members in groups.items()}

    def block_letter(self, word: Word) -> Letter:
        """The block letter standing for a reduced length-B word."""
        try:
            return self._letter_of[word]
        except KeyError:
            raise InvalidWordError(
                f"{word} is not a reduced word of length {self.B} over n={self.n}."
            ) from None

    def expand_letter(self, block_letter: Letter) -> Word:
        self.hat_alphabet.check_letter(block_letter)
        word = self.positive_part[abs(block_letter) - 1]
        return word if block_letter > 0 else word.inverse()

    def first_letter(self, block_letter: Letter) -> Letter:
        return self.expand_letter(block_letter)[0]

    def last_letter(self, block_letter: Letter) -> Letter:
        return self.expand_letter(block_letter)[-1]

    def starting_with(self, letter: Letter) -> frozenset[Letter]:
        """Block letters whose expansion begins with ``letter``."""
        self.base.check_letter(letter)
        return self._by_first_letter[letter]

    def to_dict(self) -> dict:
        return {"n": self.n, "B": self.B, "partition_rule": self.partition_rule}

    @classmethod
    def from_dict(cls, data: dict) -> "BlockAlphabet":
        rule = data.get("partition_rule", PARTITION_RULE)
        if rule != PARTITION_RULE:
            raise ValueError(f"Unknown block partition rule {rule!r}.")
        return cls(Alphabet(int(data["n"])), int(data["B"]))


def build_block_alphabet(n: int, B: int, budget: int = DEFAULT_BLOCK_BUDGET) -> BlockAlphabet:
    return BlockAlphabet(Alphabet(n), B, budget)
