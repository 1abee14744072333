from .alphabet import (
    Alphabet,
    Letter,
    make_letter,
    letter_to_text,
    letter_from_text,
)
from .word import Word, reduce, inverse, is_reduced
from .enumeration import (
    count_reduced,
    enumerate_reduced,
    sample_reduced,
    sample_reduced_batch,
    words_from_indices,
)

__all__ = [
    "Alphabet",
    "Letter",
    "make_letter",
    "letter_to_text",
    "letter_from_text",
    "Word",
    "reduce",
    "inverse",
    "is_reduced",
    "count_reduced",
    "enumerate_reduced",
    "sample_reduced",
    "sample_reduced_batch",
    "words_from_indices",
]
