from .b_automaton import BAutomaton
from .automaton_checker import AutomatonChecker
from .largeness import (
    as_rational,
    is_lambda_large,
    language_word_lower_bound,
    language_reduced_lower_bound,
)
from .counting import (
    language_counts,
    count_language_words,
    count_language_reduced,
    enumerate_language,
    automata_space_size,
)
from .automaton_factory import (
    make_sign_automaton,
    make_full_automaton,
    random_automaton,
    random_lambda_large_automaton,
)
from .growth import (
    GrowthEstimate,
    estimate_growth,
    growth_to_density,
    density_to_growth,
    intersection_growth_threshold,
    generator_count_threshold,
)

__all__ = [
    "BAutomaton",
    "AutomatonChecker",
    "as_rational",
    "is_lambda_large",
    "language_word_lower_bound",
    "language_reduced_lower_bound",
    "language_counts",
    "count_language_words",
    "count_language_reduced",
    "enumerate_language",
    "automata_space_size",
    "make_sign_automaton",
    "make_full_automaton",
    "random_automaton",
    "random_lambda_large_automaton",
    "GrowthEstimate",
    "estimate_growth",
    "growth_to_density",
    "density_to_growth",
    "intersection_growth_threshold",
    "generator_count_threshold",
]
