import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from pyrandgroups.automata import make_sign_automaton
from pyrandgroups.errors import BudgetExceededError
from pyrandgroups.sampler import Presentation
from pyrandgroups.words import Word
from .certificate import CERTIFIED_VERDICT, NO_CERTIFICATE_VERDICT, ObstructionCertificate
from .positive import find_positive_relator
from .sign_vector import SignVector, all_sign_pairs

logger = logging.getLogger(__name__)

DEFAULT_CERTIFY_MAX_N = 20

SignPair = tuple[SignVector, int]
WitnessFinder = Callable[[Presentation, SignVector, int], "tuple[int, Word] | None"]


@dataclass(frozen=True)
class CertificationOutcome:
    certificate: ObstructionCertificate | None
    failing: SignPair | None = None

    @property
    def certified(self) -> bool:
        return self.certificate is not None

    @property
    def verdict(self) -> str:
        return CERTIFIED_VERDICT if self.certified else NO_CERTIFICATE_VERDICT

    def to_dict(self) -> dict:
        if self.certificate is not None:
            return self.certificate.to_dict()
        signs, i = self.failing
        return {
            "__class__": self.__class__.__name__,
            "verdict": NO_CERTIFICATE_VERDICT,
            "n": signs.n,
            "failing": {"signs": list(signs.signs), "i": i},
        }


@dataclass(frozen=True)
class RouteComparison:
    """Per (eps, i): did the relator scan find a witness, did the A_{eps,i} route find one."""

    scan: dict[SignPair, bool] = field(compare=False)
    automaton: dict[SignPair, bool] = field(compare=False)

    @property
    def scan_only(self) -> list[SignPair]:
        return [pair for pair, found in self.scan.items() if found and not self.automaton[pair]]

    @property
    def automaton_only(self) -> list[SignPair]:
        return [pair for pair, found in self.automaton.items() if found and not self.scan[pair]]

    @property
    def automaton_implies_scan(self) -> bool:
        return not self.automaton_only


def find_accepted_relator(
    presentation: Presentation, signs: SignVector, i: int
) -> tuple[int, Word] | None:
    """The first relator in the language of A_{eps,i}."""
    automaton = make_sign_automaton(signs.signs, i)
    for index, relator in enumerate(presentation.relators):
        if automaton.accepts(relator):
            return index, relator
    return None


def _check_budget(presentation: Presentation, max_n: int):
    if presentation.n > max_n:
        raise BudgetExceededError(
            f"Certifying n={presentation.n} needs 2^n*n = {2 ** presentation.n * presentation.n} "
            f"searches, above the budget n <= {max_n}."
        )


def _search_chunk(
    presentation: Presentation, pairs: list[SignPair], finder: WitnessFinder
) -> tuple[dict, SignPair | None]:
    witnesses = {}
    for signs, i in pairs:
        witness = finder(presentation, signs, i)
        if witness is None:
            return witnesses, (signs, i)
        witnesses[(signs, i)] = witness
    return witnesses, None


def _certify(
    presentation: Presentation, finder: WitnessFinder, max_n: int, threads: int
) -> CertificationOutcome:
    _check_budget(presentation, max_n)
    pairs = list(all_sign_pairs(presentation.n))
    if threads <= 1:
        chunks = [pairs]
    else:
        size = -(-len(pairs) // threads)
        chunks = [pairs[start : start + size] for start in range(0, len(pairs), size)]

    with ThreadPoolExecutor(max_workers=max(1, threads)) as executor:
        results = list(executor.map(lambda chunk: _search_chunk(presentation, chunk, finder), chunks))

    # chunks are contiguous in search order, so the first failure found is the smallest one
    witnesses = {}
    for found, failing in results:
        witnesses.update(found)
        if failing is not None:
            return CertificationOutcome(None, failing)
    return CertificationOutcome(ObstructionCertificate(presentation.n, witnesses))


def certify_obstruction(
    presentation: Presentation, max_n: int = DEFAULT_CERTIFY_MAX_N, threads: int = 1
) -> CertificationOutcome:
    """Look for a positive relator for every (eps, i).

    A certificate means the presented group is trivial or not left-orderable.
    Otherwise the outcome carries the first (eps, i) with no witness.
    """
    return _certify(presentation, find_positive_relator, max_n, threads)


def certify_via_languages(
    presentation: Presentation, max_n: int = DEFAULT_CERTIFY_MAX_N, threads: int = 1
) -> CertificationOutcome:
    """Same search, but a witness must lie in the language of A_{eps,i}."""
    return _certify(presentation, find_accepted_relator, max_n, threads)


def compare_routes(presentation: Presentation, max_n: int = DEFAULT_CERTIFY_MAX_N) -> RouteComparison:
    _check_budget(presentation, max_n)
    scan = {}
    automaton = {}
    for signs, i in all_sign_pairs(presentation.n):
        scan[(signs, i)] = find_positive_relator(presentation, signs, i) is not None
        automaton[(signs, i)] = find_accepted_relator(presentation, signs, i) is not None

    comparison = RouteComparison(scan, automaton)
    for signs, i in comparison.scan_only:
        logger.debug("Only the relator scan found a witness for eps=%s, i=%d.", signs, i)
    if comparison.scan_only:
        logger.debug("%d pairs were certified by the relator scan alone.", len(comparison.scan_only))
    return comparison
