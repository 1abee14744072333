from dataclasses import dataclass

from pyrandgroups.errors import InvalidWordError


@dataclass(frozen=True)
class LengthClass:
    """I_P: the lengths L = B*L_hat + P with L_hat > 0."""

    B: int
    P: int

    def __post_init__(self):
        if self.B < 1:
            raise ValueError(f"Block length must be at least 1, got B={self.B}.")
        if not 0 <= self.P < self.B:
            raise ValueError(f"Residue P must satisfy 0 <= P < B={self.B}, got P={self.P}.")

    @classmethod
    def of_length(cls, L: int, B: int) -> "LengthClass":
        if L <= 0:
            raise ValueError(f"Length must be positive, got L={L}.")
        return cls(B, L % B)

    def contains(self, L: int) -> bool:
        return L > self.P and (L - self.P) % self.B == 0

    def __contains__(self, L: int) -> bool:
        return self.contains(L)

    def l_hat(self, L: int) -> int:
        if not self.contains(L):
            raise InvalidWordError(f"Length {L} is not of the form {self.B}*L_hat + {self.P} with L_hat > 0.")
        return (L - self.P) // self.B
