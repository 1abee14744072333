from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import reduce as fold

from pyrandgroups.errors import InvalidWordError
from pyrandgroups.sampler import Presentation
from pyrandgroups.words import Word
from .block_alphabet import BlockAlphabet
from .length_class import LengthClass

# A word over the block alphabet: its letters are signed indices into ``positive_part``.
BlockWord = Word


def _split_blocks(word: Word, block_alphabet: BlockAlphabet) -> BlockWord:
    B = block_alphabet.B
    return Word(
        tuple(block_alphabet.block_letter(word[start : start + B]) for start in range(0, len(word), B))
    )


def associate_word(word: Word, block_alphabet: BlockAlphabet) -> BlockWord:
    """Cut a reduced word of length divisible by B into blocks of length B."""
    word.check_alphabet(block_alphabet.base)
    if word.is_empty:
        raise InvalidWordError("Cannot associate the empty word.")
    if len(word) % block_alphabet.B:
        raise InvalidWordError(
            f"Word length {len(word)} is not divisible by the block length {block_alphabet.B}."
        )
    if not word.is_reduced():
        raise InvalidWordError(f"{word} is not reduced.")
    return _split_blocks(word, block_alphabet)


def expand(block_word: BlockWord, block_alphabet: BlockAlphabet) -> Word:
    """Substitute every block letter by its length-B word."""
    return fold(
        lambda left, right: left + right,
        (block_alphabet.expand_letter(letter) for letter in block_word),
        Word(),
    )


def _check_pair(r1: Word, r2: Word, block_alphabet: BlockAlphabet, P: int) -> LengthClass:
    length_class = LengthClass(block_alphabet.B, P)
    if P == 0:
        raise ValueError("Pairing needs an overlap 1 <= P < B; use associate_word for P = 0.")
    if len(r1) != len(r2):
        raise InvalidWordError(f"Paired relators must have equal lengths, got {len(r1)} and {len(r2)}.")
    length_class.l_hat(len(r1))
    for relator in (r1, r2):
        relator.check_alphabet(block_alphabet.base)
        if not relator.is_reduced():
            raise InvalidWordError(f"{relator} is not reduced.")
    return length_class


def pair_relators(r1: Word, r2: Word, block_alphabet: BlockAlphabet, P: int) -> BlockWord | None:
    """The associated word of q1 q2 when r1 = q1 v^-1 and r2 = v q2 with |v| = P.

    Returns None when the last P letters of ``r1`` are not the inverse of the
    first P letters of ``r2``. The result has 2*L_hat block letters and need not
    be reduced.
    """
    _check_pair(r1, r2, block_alphabet, P)
    if r1.suffix(P) != r2.prefix(P).inverse():
        return None
    return _split_blocks(r1[:-P] + r2[P:], block_alphabet)


@dataclass(frozen=True)
class AssociatedSet:
    """R-hat together with the block alphabet and residue it was built with."""

    block_alphabet: BlockAlphabet
    P: int
    relators: frozenset[BlockWord]

    def __len__(self) -> int:
        return len(self.relators)

    def __contains__(self, block_word: BlockWord) -> bool:
        return block_word in self.relators

    def to_presentation(self) -> Presentation:
        """<S-hat | R-hat>, relators in sorted order."""
        return Presentation(self.block_alphabet.hat_alphabet, tuple(sorted(self.relators)))

    def to_dict(self) -> dict:
        return {
            "__class__": self.__class__.__name__,
            "n": self.block_alphabet.n_hat,
            "P": self.P,
            "block_alphabet": self.block_alphabet.to_dict(),
            "relators": [relator.to_list() for relator in sorted(self.relators)],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AssociatedSet":
        block_alphabet = BlockAlphabet.from_dict(data["block_alphabet"])
        relators = frozenset(Word.from_list(relator) for relator in data["relators"])
        for relator in relators:
            relator.check_alphabet(block_alphabet.hat_alphabet)
        return cls(block_alphabet, int(data["P"]), relators)


def build_associated_set(
    presentation: Presentation, block_alphabet: BlockAlphabet, threads: int = 1
) -> AssociatedSet:
    """R-hat for a presentation whose relators share one reduced length L.

    For L divisible by B every relator is associated on its own; otherwise every
    ordered pair (r1, r2), r1 = r2 allowed, that overlaps along P = L mod B
    letters contributes its paired word.
    """
    if presentation.n != block_alphabet.n:
        raise ValueError(
            f"Presentation has n={presentation.n} but the block alphabet is over n={block_alphabet.n}."
        )
    if not presentation.relators:
        return AssociatedSet(block_alphabet, 0, frozenset())

    L = presentation.checker.check_common_length()
    presentation.checker.check_reduced()
    length_class = LengthClass.of_length(L, block_alphabet.B)
    length_class.l_hat(L)
    P = length_class.P

    if P == 0:
        relators = frozenset(associate_word(relator, block_alphabet) for relator in presentation.relators)
        return AssociatedSet(block_alphabet, P, relators)

    by_prefix: dict[Word, list[Word]] = {}
    for relator in presentation.relators:
        by_prefix.setdefault(relator.prefix(P), []).append(relator)

    def pairs_from(r1: Word) -> set[BlockWord]:
        q1 = r1[:-P]
        partners = by_prefix.get(r1.suffix(P).inverse(), [])
        return {_split_blocks(q1 + r2[P:], block_alphabet) for r2 in partners}

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        found = executor.map(pairs_from, presentation.relators)
        relators = frozenset().union(*found)
    return AssociatedSet(block_alphabet, P, relators)
