import math
from dataclasses import dataclass, field
from fractions import Fraction

from .b_automaton import BAutomaton
from .counting import language_counts
from .largeness import as_rational


@dataclass(frozen=True)
class GrowthEstimate:
    """A finite-range proxy for the growth rate k and density d' of a language.

    ``growth_rate_lower`` comes from the ratio of the exact counts at the two
    largest lengths in ``count_basis``; ``constant`` is the c making
    count(L) = c * k^L at the largest length, and ``threshold`` is the first
    length from which every recorded count is at least c * k^L.
    """

    growth_rate_lower: float
    density_lower: float | None
    count_basis: list[tuple[int, int]] = field(compare=False)
    constant: Fraction
    ratio: Fraction
    L_range: tuple[int, int]
    threshold: int | None
    degenerate: bool = False


def growth_to_density(k: float, n: int) -> float | None:
    """d with k = (2n-1)^d; undefined for n = 1 or k <= 0."""
    if n < 2 or k <= 0:
        return None
    return math.log(k) / math.log(2 * n - 1)


def density_to_growth(d: float, n: int) -> float:
    return (2 * n - 1) ** d


def intersection_growth_threshold(n: int, d: float) -> float:
    """(2n-1)^(1-d): languages growing faster meet a random set at density d w.o.p."""
    return (2 * n - 1) ** (1 - d)


def estimate_growth(
    automaton: BAutomaton, L_min: int, L_max: int, reduced: bool = True
) -> GrowthEstimate:
    if not 1 <= L_min < L_max:
        raise ValueError(f"Need 1 <= L_min < L_max, got L_min={L_min}, L_max={L_max}.")

    counts = language_counts(automaton, L_max, reduced=reduced)
    basis = [(L, counts[L - 1]) for L in range(L_min, L_max + 1)]
    top, previous = counts[L_max - 1], counts[L_max - 2]

    if top == 0 or previous == 0:
        return GrowthEstimate(
            growth_rate_lower=0.0,
            density_lower=None,
            count_basis=basis,
            constant=Fraction(0),
            ratio=Fraction(0),
            L_range=(L_max - 1, L_max),
            threshold=None,
            degenerate=True,
        )

    ratio = Fraction(top, previous)
    constant = Fraction(top) / ratio**L_max

    threshold = None
    for L, count in reversed(basis):
        if count < constant * ratio**L:
            break
        threshold = L

    k = float(ratio)
    return GrowthEstimate(
        growth_rate_lower=k,
        density_lower=growth_to_density(k, automaton.alphabet.n),
        count_basis=basis,
        constant=constant,
        ratio=ratio,
        L_range=(L_max - 1, L_max),
        threshold=threshold,
    )


def generator_count_threshold(lam: Fraction | float | str, d: float, n_max: int = 10_000) -> int | None:
    """Smallest n >= 2 with ceil(lam*2n) - 1 > (2n-1)^(1-d).

    From that n on, the reduced part of every lam-large language grows fast
    enough to meet a random set at density d w.o.p. None if no n <= n_max works.
    """
    lam = as_rational(lam)
    for n in range(2, n_max + 1):
        if math.ceil(lam * 2 * n) - 1 > intersection_growth_threshold(n, d):
            return n
    return None
