import math
import warnings
from fractions import Fraction

from pyrandgroups.automata import BAutomaton, as_rational, count_language_words
from pyrandgroups.errors import InvalidWordError
from pyrandgroups.words import Letter, Word
from .association import BlockWord, associate_word, pair_relators
from .block_alphabet import BlockAlphabet
from .length_class import LengthClass


def rho_following(block_alphabet: BlockAlphabet, block_letter: Letter) -> frozenset[Letter]:
    """Block letters that would cancel against the end of ``block_letter``."""
    return block_alphabet.starting_with(-block_alphabet.last_letter(block_letter))


def rho_starting(block_alphabet: BlockAlphabet, letter: Letter) -> frozenset[Letter]:
    """Block letters whose expansion begins with the inverse of ``letter``."""
    return block_alphabet.starting_with(-letter)


def _check_over(automaton: BAutomaton, block_alphabet: BlockAlphabet):
    if automaton.alphabet != block_alphabet.hat_alphabet:
        raise ValueError(
            f"Automaton is over n={automaton.alphabet.n} letters, expected the block alphabet "
            f"with n_hat={block_alphabet.n_hat}."
        )


def derive_reduced_automaton(automaton: BAutomaton, block_alphabet: BlockAlphabet) -> BAutomaton:
    """A^red: drop from every sigma[s] the block letters that start by cancelling s.

    Its language is the part of A's language whose expansions are reduced.
    """
    _check_over(automaton, block_alphabet)
    return automaton.with_sigma(
        {
            block_letter: targets - rho_following(block_alphabet, block_letter)
            for block_letter, targets in automaton.sigma.items()
        }
    )


def derive_continuation_automaton(
    automaton: BAutomaton, block_alphabet: BlockAlphabet, block_letter: Letter, letter: Letter
) -> BAutomaton:
    """A^{s_hat,s}: A with sigma_empty replaced by sigma[s_hat] minus the blocks starting with s^-1."""
    _check_over(automaton, block_alphabet)
    sigma_empty = automaton.sigma[block_letter] - rho_starting(block_alphabet, letter)
    if not sigma_empty:
        warnings.warn(
            f"Continuation automaton for block {block_letter} and letter {letter} has an empty "
            "sigma_empty; its language is empty.",
            UserWarning,
        )
    return automaton.with_sigma_empty(sigma_empty)


def reduced_largeness(lam: Fraction | float | str, n: int) -> Fraction:
    """lambda' = lambda - 1/(2n), the largeness A^red keeps."""
    return as_rational(lam) - Fraction(1, 2 * n)


def in_prefix_set(word: Word, automaton: BAutomaton, block_alphabet: BlockAlphabet, P: int) -> bool:
    """Reduced, of length in I_P, and its first L - P letters associate into A's language."""
    _check_over(automaton, block_alphabet)
    l_hat = LengthClass(block_alphabet.B, P).l_hat(len(word))
    if not word.is_reduced():
        return False
    return automaton.accepts(associate_word(word.prefix(l_hat * block_alphabet.B), block_alphabet))


def terminal_data(word: Word, block_alphabet: BlockAlphabet, P: int) -> tuple[Letter, Word]:
    """(s_hat, v) for a relator r1 = q1 v^-1: v^-1 is the last P letters, s_hat the block before it."""
    if not 1 <= P < block_alphabet.B:
        raise ValueError(f"Terminal data needs 1 <= P < B={block_alphabet.B}, got P={P}.")
    LengthClass(block_alphabet.B, P).l_hat(len(word))
    end = len(word) - P
    last_block = word[end - block_alphabet.B : end]
    return block_alphabet.block_letter(last_block), word.suffix(P).inverse()


def in_suffix_set(
    word: Word, automaton: BAutomaton, block_alphabet: BlockAlphabet, block_letter: Letter, v: Word
) -> bool:
    """Starts with v and the remaining letters are a reduced word in the language of A^{s_hat,s}."""
    P = len(v)
    if not 1 <= P < block_alphabet.B:
        raise ValueError(f"The overlap v must have length 1 <= P < B={block_alphabet.B}, got {P}.")
    if not v.is_reduced():
        raise InvalidWordError(f"{v} is not reduced.")
    LengthClass(block_alphabet.B, P).l_hat(len(word))
    if word.prefix(P) != v:
        return False
    tail = word[P:]
    if not tail.is_reduced():
        return False
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        continuation = derive_continuation_automaton(automaton, block_alphabet, block_letter, v[-1])
    return continuation.accepts(associate_word(tail, block_alphabet))


def pairing_completes_language(
    automaton: BAutomaton, r1: Word, r2: Word, block_alphabet: BlockAlphabet, P: int
) -> bool:
    """If r1 is in the prefix set and r2 in the matching suffix set, their paired word is accepted by A.

    Returns True when the hypotheses fail, so the check can run over arbitrary pairs.
    """
    if not in_prefix_set(r1, automaton, block_alphabet, P):
        return True
    block_letter, v = terminal_data(r1, block_alphabet, P)
    if len(r2) != len(r1) or not in_suffix_set(r2, automaton, block_alphabet, block_letter, v):
        return True
    paired = pair_relators(r1, r2, block_alphabet, P)
    return paired is not None and automaton.accepts(paired)


def count_block_language(automaton: BAutomaton, block_alphabet: BlockAlphabet, l_hat: int) -> int:
    """Reduced words of length B*l_hat over S whose associated word A accepts."""
    return count_language_words(derive_reduced_automaton(automaton, block_alphabet), l_hat)


def reduced_growth_lower_bound(lam: Fraction | float | str, n: int, B: int) -> float:
    """lambda'^(1/B) * (2n-1), the growth rate guaranteed for lengths in any I_P."""
    lam_reduced = reduced_largeness(lam, n)
    if lam_reduced <= 0:
        raise ValueError(f"lambda must exceed 1/(2n) = {Fraction(1, 2 * n)}, got {as_rational(lam)}.")
    return float(lam_reduced) ** (1 / B) * (2 * n - 1)


def block_length_threshold(n: int, d: float) -> int:
    """Smallest B with 4^(1/B) < (2n-1)^d."""
    if n < 2:
        raise ValueError(f"Block lengths are only meaningful for n >= 2, got n={n}.")
    if not 0 < d < 1:
        raise ValueError(f"Density must lie strictly between 0 and 1, got {d}.")
    target = (2 * n - 1) ** d
    B = max(1, math.floor(math.log(4) / math.log(target)))
    while 4 ** (1 / B) >= target:
        B += 1
    return B
