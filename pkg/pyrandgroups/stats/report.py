from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .hit_model import HitModelParams, chebyshev_window_bound, distinctness_rate

CSV_COLUMNS = (
    "L",
    "c_L",
    "a_L",
    "b_L",
    "mean_exact",
    "var_exact",
    "cheb_bound",
    "empirical_in_window",
    "q_exact",
    "q_bernoulli",
    "hits_distinct_mean",
    "envelope_ratio",
)


@dataclass(frozen=True)
class ConcentrationReport:
    """Exact hit-model quantities next to what the simulation observed.

    Exact moments are fractions; q_exact is evaluated in floating point. The intersection
    fields stay None for plain concentration experiments.
    """

    params: HitModelParams
    trials: int
    empirical_in_window: float
    mean_exact: Fraction
    var_exact: Fraction
    chebyshev_bound: Fraction
    q_exact: float
    q_bernoulli: Fraction
    empirical_mean: float
    empirical_variance: float
    empirical_tail: float
    empirical_distinct: float
    hit_distribution: dict[int, int] = field(compare=False)
    hits: np.ndarray = field(compare=False, repr=False)
    L: int | None = None
    d_prime: float | None = None
    hits_distinct_mean: float | None = None
    envelope_ratio: float | None = None
    intersect_fraction: float | None = None
    distinct_hits: np.ndarray | None = field(default=None, compare=False, repr=False)

    def to_row(self) -> dict:
        """The CSV columns, exact values rendered as decimals."""
        return {
            "L": self.L if self.L is not None else "",
            "c_L": self.params.c_L,
            "a_L": self.params.a_L,
            "b_L": self.params.b_L,
            "mean_exact": float(self.mean_exact),
            "var_exact": float(self.var_exact),
            "cheb_bound": float(self.chebyshev_bound),
            "empirical_in_window": self.empirical_in_window,
            "q_exact": self.q_exact,
            "q_bernoulli": float(self.q_bernoulli),
            "hits_distinct_mean": "" if self.hits_distinct_mean is None else self.hits_distinct_mean,
            "envelope_ratio": "" if self.envelope_ratio is None else self.envelope_ratio,
        }

    def to_dict(self) -> dict:
        return {
            "__class__": self.__class__.__name__,
            "params": self.params.to_dict(),
            "trials": self.trials,
            "empirical_in_window": self.empirical_in_window,
            "mean_exact": str(self.mean_exact),
            "var_exact": str(self.var_exact),
            "chebyshev_bound": str(self.chebyshev_bound),
            "q_exact": self.q_exact,
            "q_bernoulli": str(self.q_bernoulli),
            "empirical_mean": self.empirical_mean,
            "empirical_variance": self.empirical_variance,
            "empirical_tail": self.empirical_tail,
            "empirical_distinct": self.empirical_distinct,
            "hit_distribution": {str(value): count for value, count in sorted(self.hit_distribution.items())},
            "L": self.L,
            "d_prime": self.d_prime,
            "hits_distinct_mean": self.hits_distinct_mean,
            "envelope_ratio": self.envelope_ratio,
            "intersect_fraction": self.intersect_fraction,
        }


def summarize_hits(
    params: HitModelParams, hits: np.ndarray, all_distinct: np.ndarray, **extra
) -> ConcentrationReport:
    """Build a report from per-trial hit counts D_L and all-distinct flags."""
    hits = np.asarray(hits, dtype=np.int64)
    trials = len(hits)
    if trials == 0:
        raise ValueError("A report needs at least one trial.")

    mean, variance = params.mean, params.variance
    low, high = params.window
    alpha = params.epsilon * mean

    values, counts = np.unique(hits, return_counts=True)
    in_window = 0
    in_tail = 0
    for value, count in zip(values.tolist(), counts.tolist()):
        if low <= value <= high:
            in_window += count
        if abs(value - mean) >= alpha:
            in_tail += count

    q_exact = distinctness_rate(params.b_L, params.c_L)
    q_bernoulli = 1 - Fraction(params.b_L * (params.b_L - 1), params.c_L)
    return ConcentrationReport(
        params=params,
        trials=trials,
        empirical_in_window=in_window / trials,
        mean_exact=mean,
        var_exact=variance,
        chebyshev_bound=chebyshev_window_bound(params),
        q_exact=q_exact,
        q_bernoulli=q_bernoulli,
        empirical_mean=float(hits.mean()),
        empirical_variance=float(hits.var(ddof=1)) if trials > 1 else 0.0,
        empirical_tail=in_tail / trials,
        empirical_distinct=float(np.mean(all_distinct)),
        hit_distribution=dict(zip(values.tolist(), counts.tolist())),
        hits=hits,
        **extra,
    )
