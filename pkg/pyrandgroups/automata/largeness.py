import math
from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .b_automaton import BAutomaton


def as_rational(value: Fraction | float | int | str) -> Fraction:
    """Exact reading of lambda-like parameters; ``0.5`` and ``"1/2"`` both give 1/2."""
    if isinstance(value, (Fraction, int)):
        return Fraction(value)
    return Fraction(str(value))


def is_lambda_large(automaton: "BAutomaton", lam: Fraction | float | str) -> bool:
    """sigma_empty is non-empty and every |sigma[s]| >= lam * 2n, compared exactly."""
    lam = as_rational(lam)
    if not 0 < lam <= 1:
        raise ValueError(f"lambda must lie in (0, 1], got {lam}.")
    threshold = lam * automaton.alphabet.size
    if not automaton.sigma_empty:
        return False
    return all(len(targets) >= threshold for targets in automaton.sigma.values())


def language_word_lower_bound(lam: Fraction | float | str, n: int, L: int) -> int:
    """ceil(lam*2n)^(L-1): words of length L in the language of any lambda-large automaton."""
    return math.ceil(as_rational(lam) * 2 * n) ** (L - 1)


def language_reduced_lower_bound(lam: Fraction | float | str, n: int, L: int) -> int:
    """(ceil(lam*2n) - 1)^(L-1): reduced words of length L in such a language."""
    return (math.ceil(as_rational(lam) * 2 * n) - 1) ** (L - 1)
