from dataclasses import dataclass

from pyrandgroups.errors import SizeLimitError

from .rng import check_seed
from .relator_count import DEFAULT_RELATOR_CAP, compute_relator_count, density_as_rational


@dataclass(frozen=True)
class SamplerConfig:
    """Parameters of a random set of relators at density ``d``, at length ``L``."""

    n: int
    d: float
    L: int
    seed: int
    count_override: int | None = None
    cap: int = DEFAULT_RELATOR_CAP

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Generator count must be at least 1, got n={self.n}.")
        if not 0 < density_as_rational(self.d) < 1:
            raise ValueError(f"Density must lie strictly between 0 and 1, got d={self.d}.")
        if self.L < 1:
            raise ValueError(f"Relator length must be at least 1, got L={self.L}.")
        if self.count_override is not None and self.count_override < 1:
            raise ValueError(
                f"An explicit relator count must be at least 1, got {self.count_override}."
            )
        if self.count_override is not None and self.count_override > self.cap:
            raise SizeLimitError(
                f"Explicit relator count {self.count_override} exceeds the relator cap {self.cap}."
            )
        check_seed(self.seed)

    @property
    def relator_count(self) -> int:
        """b_L, or the explicit override."""
        if self.count_override is not None:
            return self.count_override
        return compute_relator_count(self.n, self.d, self.L, cap=self.cap)

    def to_dict(self):
        return {
            "__class__": "SamplerConfig",
            "n": self.n,
            "d": self.d,
            "L": self.L,
            "seed": self.seed,
            "count_override": self.count_override,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SamplerConfig":
        return cls(
            n=int(data["n"]),
            d=float(data["d"]),
            L=int(data["L"]),
            seed=int(data["seed"]),
            count_override=data.get("count_override"),
        )
