from pyrandgroups.blocks import BlockAlphabet, DEFAULT_BLOCK_BUDGET, build_associated_set
from pyrandgroups.sampler import Presentation
from pyrandgroups.words import Alphabet
from .certifier import DEFAULT_CERTIFY_MAX_N, CertificationOutcome, certify_obstruction


def certify_associated(
    presentation: Presentation,
    B: int,
    max_n: int = DEFAULT_CERTIFY_MAX_N,
    block_budget: int = DEFAULT_BLOCK_BUDGET,
    threads: int = 1,
) -> CertificationOutcome:
    """Certify <S-hat | R-hat>, the associated presentation over blocks of length B.

    A certificate there makes the associated group, and hence G, trivial or not
    left-orderable.
    """
    block_alphabet = BlockAlphabet(Alphabet(presentation.n), B, block_budget)
    associated = build_associated_set(presentation, block_alphabet, threads=threads)
    return certify_obstruction(associated.to_presentation(), max_n=max_n, threads=threads)
