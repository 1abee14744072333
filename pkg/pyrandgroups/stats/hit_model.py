import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from pyrandgroups.automata import as_rational


@dataclass(frozen=True)
class HitModelParams:
    """b_L uniform draws from c_L objects, a_L of which are distinguished."""

    c_L: int
    a_L: int
    b_L: int
    epsilon: Fraction = Fraction(1, 2)

    def __post_init__(self):
        object.__setattr__(self, "epsilon", as_rational(self.epsilon))
        if self.c_L <= 0 or self.a_L <= 0 or self.b_L <= 0:
            raise ValueError(
                f"c_L, a_L and b_L must be positive, got c_L={self.c_L}, a_L={self.a_L}, b_L={self.b_L}."
            )
        if self.a_L > self.c_L:
            raise ValueError(f"a_L={self.a_L} cannot exceed c_L={self.c_L}.")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}.")

    @property
    def hit_probability(self) -> Fraction:
        return Fraction(self.a_L, self.c_L)

    @property
    def mean(self) -> Fraction:
        return moments(self)[0]

    @property
    def variance(self) -> Fraction:
        return moments(self)[1]

    @property
    def window(self) -> tuple[Fraction, Fraction]:
        """[(1 - eps) E D_L, (1 + eps) E D_L]."""
        return (1 - self.epsilon) * self.mean, (1 + self.epsilon) * self.mean

    def to_dict(self) -> dict:
        return {
            "__class__": self.__class__.__name__,
            "c_L": self.c_L,
            "a_L": self.a_L,
            "b_L": self.b_L,
            "epsilon": str(self.epsilon),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "HitModelParams":
        return cls(int(data["c_L"]), int(data["a_L"]), int(data["b_L"]), as_rational(data["epsilon"]))


def moments(params: HitModelParams) -> tuple[Fraction, Fraction]:
    """E D_L = a b / c and Var D_L = (a b / c)(1 - a / c), exactly."""
    p = params.hit_probability
    mean = params.b_L * p
    return mean, mean * (1 - p)


def chebyshev_tail(variance: Fraction | float, alpha: Fraction | float) -> Fraction | float:
    """min(1, Var / alpha^2), a bound on P(|xi - E xi| >= alpha)."""
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}.")
    return min(1, variance / alpha**2)


def chebyshev_window_bound(params: HitModelParams) -> Fraction:
    """Bound on the chance D_L leaves its (1 +- eps) window."""
    mean, variance = moments(params)
    return chebyshev_tail(variance, params.epsilon * mean)


def simplified_window_bound(params: HitModelParams) -> Fraction:
    """1 / (eps^2 E D_L), which dominates :func:`chebyshev_window_bound`."""
    return 1 / (params.epsilon**2 * params.mean)


def distinctness_probability(b: int, c: int) -> tuple[Fraction, Fraction]:
    """Chance that b uniform draws from c objects are pairwise distinct, and 1 - b(b-1)/c."""
    if b < 1 or c < 1:
        raise ValueError(f"b and c must be at least 1, got b={b}, c={c}.")
    exact = Fraction(math.perm(c, b), c**b)
    return exact, 1 - Fraction(b * (b - 1), c)


def distinctness_rate(b: int, c: int) -> float:
    """Floating point c(c-1)...(c-b+1) / c^b, summed in log space."""
    if b < 1 or c < 1:
        raise ValueError(f"b and c must be at least 1, got b={b}, c={c}.")
    if b > c:
        return 0.0
    return float(np.exp(np.log1p(-np.arange(b) / c).sum()))
