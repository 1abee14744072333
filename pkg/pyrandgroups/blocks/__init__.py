from .block_alphabet import BlockAlphabet, build_block_alphabet, DEFAULT_BLOCK_BUDGET, PARTITION_RULE
from .length_class import LengthClass
from .association import (
    BlockWord,
    AssociatedSet,
    associate_word,
    expand,
    pair_relators,
    build_associated_set,
)
from .derived import (
    rho_following,
    rho_starting,
    derive_reduced_automaton,
    derive_continuation_automaton,
    reduced_largeness,
    in_prefix_set,
    in_suffix_set,
    terminal_data,
    pairing_completes_language,
    count_block_language,
    reduced_growth_lower_bound,
    block_length_threshold,
)

__all__ = [
    "BlockAlphabet",
    "build_block_alphabet",
    "DEFAULT_BLOCK_BUDGET",
    "PARTITION_RULE",
    "LengthClass",
    "BlockWord",
    "AssociatedSet",
    "associate_word",
    "expand",
    "pair_relators",
    "build_associated_set",
    "rho_following",
    "rho_starting",
    "derive_reduced_automaton",
    "derive_continuation_automaton",
    "reduced_largeness",
    "in_prefix_set",
    "in_suffix_set",
    "terminal_data",
    "pairing_completes_language",
    "count_block_language",
    "reduced_growth_lower_bound",
    "block_length_threshold",
]
