from dataclasses import dataclass, field
from functools import cached_property

from pyrandgroups.words import Alphabet, Word
from .presentation_checker import PresentationChecker
from .sampler_config import SamplerConfig


@dataclass(frozen=True)
class Presentation:
    """A presentation <S | R>. ``relators`` is a tuple: order and repetitions are kept."""

    alphabet: Alphabet
    relators: tuple[Word, ...] = ()
    provenance: SamplerConfig | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "relators", tuple(self.relators))
        self.checker.check_alphabet()
        self.checker.check_sampled()

    @cached_property
    def checker(self) -> PresentationChecker:
        return PresentationChecker(self)

    @property
    def n(self) -> int:
        return self.alphabet.n

    @property
    def L(self) -> int | None:
        """The common relator length, or None if there are no relators or lengths differ."""
        lengths = {len(relator) for relator in self.relators}
        if len(lengths) == 1:
            return lengths.pop()
        return None

    def __len__(self) -> int:
        return len(self.relators)

    def with_relators(self, *relators: Word) -> "Presentation":
        """A new presentation with extra relators appended (provenance dropped)."""
        return Presentation(self.alphabet, self.relators + tuple(relators))

    def to_dict(self):
        """Serialize the presentation to a dictionary."""
        config = self.provenance
        data = {
            "__class__": "Presentation",
            "n": self.n,
            "L": self.L,
            "d": config.d if config else None,
            "seed": config.seed if config else None,
            "relators": [relator.to_list() for relator in self.relators],
        }
        if config is not None and config.count_override is not None:
            data["count_override"] = config.count_override
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "Presentation":
        """Deserialize a presentation from a dictionary."""
        relators = tuple(Word.from_list(relator) for relator in data["relators"])
        provenance = None
        if data.get("d") is not None and data.get("seed") is not None and data.get("L") is not None:
            provenance = SamplerConfig(
                n=int(data["n"]),
                d=float(data["d"]),
                L=int(data["L"]),
                seed=int(data["seed"]),
                count_override=data.get("count_override"),
            )
        return cls(Alphabet(int(data["n"])), relators, provenance)
