from dataclasses import dataclass, field
from typing import Iterator, Mapping

from pyrandgroups.sampler import Presentation
from pyrandgroups.words import Word
from .positive import is_positive_witness
from .sign_vector import SignVector, all_sign_pairs

CERTIFIED_VERDICT = "CERTIFIED: trivial-or-non-LO"
NO_CERTIFICATE_VERDICT = "NO-CERTIFICATE"


@dataclass(frozen=True)
class ObstructionCertificate:
    """For every (eps, i) a relator that is a positive word containing a_i^{eps_i}.

    Existence of such a certificate proves the presented group is trivial or not
    left-orderable.
    """

    n: int
    witnesses: Mapping[tuple[SignVector, int], tuple[int, Word]] = field(compare=False)

    def __post_init__(self):
        expected = set(all_sign_pairs(self.n))
        if set(self.witnesses) != expected:
            raise ValueError(
                f"A certificate for n={self.n} needs a witness for each of the {len(expected)} pairs (eps, i)."
            )

    def __iter__(self) -> Iterator[tuple[SignVector, int, int, Word]]:
        for signs, i in all_sign_pairs(self.n):
            index, relator = self.witnesses[(signs, i)]
            yield signs, i, index, relator

    def __len__(self) -> int:
        return len(self.witnesses)

    def witness(self, signs: SignVector, i: int) -> tuple[int, Word]:
        return self.witnesses[(signs, i)]

    def verify(self, presentation: Presentation) -> bool:
        """Re-check every witness against ``presentation``."""
        if presentation.n != self.n:
            return False
        for signs, i, index, relator in self:
            if not 0 <= index < len(presentation.relators):
                return False
            if presentation.relators[index] != relator:
                return False
            if not is_positive_witness(relator, signs, i):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "__class__": self.__class__.__name__,
            "n": self.n,
            "verdict": CERTIFIED_VERDICT,
            "witnesses": [
                {
                    "signs": list(signs.signs),
                    "i": i,
                    "relator_index": index,
                    "relator": relator.to_list(),
                }
                for signs, i, index, relator in self
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ObstructionCertificate":
        witnesses = {
            (SignVector(tuple(entry["signs"])), entry["i"]): (
                entry["relator_index"],
                Word.from_list(entry["relator"]),
            )
            for entry in data["witnesses"]
        }
        return cls(data["n"], witnesses)
