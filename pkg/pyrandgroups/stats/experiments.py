import logging
import warnings
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

import numpy as np
from blinker import Signal

from pyrandgroups.automata import (
    BAutomaton,
    count_language_reduced,
    estimate_growth,
)
from pyrandgroups.sampler import DEFAULT_RELATOR_CAP, compute_relator_count, derive_rng
from pyrandgroups.words import count_reduced, sample_reduced_batch
from .hit_model import HitModelParams
from .report import ConcentrationReport, summarize_hits

logger = logging.getLogger(__name__)

TRIAL_BLOCK_SIZE = 4096
CONCENTRATION_STREAM = 1
INTERSECTION_STREAM = 2


def _all_distinct(rows: np.ndarray) -> np.ndarray:
    """Per row of a 2-D array: are its entries pairwise distinct."""
    if rows.shape[1] < 2:
        return np.ones(rows.shape[0], dtype=bool)
    ordered = np.sort(rows, axis=1)
    return ~(ordered[:, 1:] == ordered[:, :-1]).any(axis=1)


class ConcentrationExperiment:
    """Draw b_L of c_L objects uniformly and count the distinguished ones, trial after trial.

    Trials run in blocks of ``TRIAL_BLOCK_SIZE``, each block from its own derived
    generator, so the outcome only depends on ``seed``.
    """

    def __init__(self, params: HitModelParams, trials: int, seed: int):
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}.")
        if params.c_L > np.iinfo(np.int64).max:
            raise ValueError(f"c_L={params.c_L} is too large to simulate.")
        self.params = params
        self.trials = trials
        self.seed = seed
        self._restart_events()

    def _restart_events(self):
        self.events: dict[str, Signal] = {
            "trial_completed": Signal(),
        }

    def run(self) -> ConcentrationReport:
        hits = np.empty(self.trials, dtype=np.int64)
        distinct = np.empty(self.trials, dtype=bool)
        for block, start in enumerate(range(0, self.trials, TRIAL_BLOCK_SIZE)):
            size = min(TRIAL_BLOCK_SIZE, self.trials - start)
            rng = derive_rng(self.seed, CONCENTRATION_STREAM, block)
            draws = rng.integers(0, self.params.c_L, size=(size, self.params.b_L))
            # the first a_L objects are the distinguished ones
            hits[start : start + size] = (draws < self.params.a_L).sum(axis=1)
            distinct[start : start + size] = _all_distinct(draws)
            self.events["trial_completed"].send(self, completed=start + size, total=self.trials)
        return summarize_hits(self.params, hits, distinct)


def run_concentration_experiment(params: HitModelParams, trials: int, seed: int) -> ConcentrationReport:
    return ConcentrationExperiment(params, trials, seed).run()


class IntersectionExperiment:
    """Random relator sets at density d against a fixed language R_f given by an automaton.

    For every L the exact a_L = |R_f ∩ R_L|, c_L = |R_L| and b_L are computed,
    then ``trials`` relator sets are sampled and their entries tested for
    membership in R_f.
    """

    def __init__(
        self,
        fixed_set: BAutomaton,
        d: float,
        L_values: Sequence[int],
        trials: int,
        seed: int,
        epsilon=0.5,
        cap: int = DEFAULT_RELATOR_CAP,
        threads: int = 1,
    ):
        if not L_values:
            raise ValueError("At least one length L is needed.")
        if trials < 1:
            raise ValueError(f"trials must be at least 1, got {trials}.")
        if min(L_values) < 1:
            raise ValueError(f"Lengths must be at least 1, got {min(L_values)}.")
        if max(L_values) < 2:
            raise ValueError("The density of the fixed language needs some length L >= 2.")
        self.fixed_set = fixed_set
        self.alphabet = fixed_set.alphabet
        self.d = d
        self.L_values = sorted(set(L_values))
        self.trials = trials
        self.seed = seed
        self.epsilon = epsilon
        self.cap = cap
        self.threads = threads
        self._restart_events()

    def _restart_events(self):
        self.events: dict[str, Signal] = {
            "trial_completed": Signal(),
            "length_completed": Signal(),
        }

    @property
    def n(self) -> int:
        return self.alphabet.n

    def language_density(self) -> float:
        """d' of R_f from the exact reduced counts at the largest lengths of the sweep."""
        L_max = self.L_values[-1]
        L_min = min(self.L_values[0], L_max - 1)
        estimate = estimate_growth(self.fixed_set, L_min, L_max, reduced=True)
        if estimate.degenerate or estimate.density_lower is None:
            raise ValueError("The fixed set has no reduced words at the largest lengths; d' is undefined.")
        return estimate.density_lower

    def check_hypotheses(self, d_prime: float):
        self.alphabet.warn_if_degenerate("Intersection experiment")
        if self.d + d_prime <= 1:
            warnings.warn(
                f"d + d' = {self.d + d_prime:.4f} <= 1: outside the hypothesis of the intersection result.",
                UserWarning,
            )
        if self.d >= 0.5:
            warnings.warn(
                f"d = {self.d} >= 1/2: relators are not distinct w.o.p., distinct-entry bounds do not apply.",
                UserWarning,
            )

    def _trial(self, L: int, b_L: int, trial: int) -> tuple[int, int, bool]:
        rng = derive_rng(self.seed, INTERSECTION_STREAM, L, trial)
        rows = sample_reduced_batch(self.alphabet, L, b_L, rng)
        accepted = self.fixed_set.accepts_indices(rows)
        hits = int(accepted.sum())
        distinct_hits = len(np.unique(rows[accepted], axis=0)) if hits else 0
        all_distinct = len(np.unique(rows, axis=0)) == b_L
        self.events["trial_completed"].send(self, L=L, trial=trial)
        return hits, distinct_hits, all_distinct

    def run_length(self, L: int, d_prime: float) -> ConcentrationReport:
        a_L = count_language_reduced(self.fixed_set, L)
        if a_L == 0:
            raise ValueError(f"The fixed set has no reduced words of length {L}.")
        c_L = count_reduced(self.alphabet, L)
        b_L = compute_relator_count(self.n, self.d, L, self.cap)
        params = HitModelParams(c_L, a_L, b_L, self.epsilon)

        with ThreadPoolExecutor(max_workers=max(1, self.threads)) as executor:
            outcomes = list(executor.map(lambda trial: self._trial(L, b_L, trial), range(self.trials)))
        hits, distinct_hits, all_distinct = (np.array(column) for column in zip(*outcomes))

        envelope = (2 * self.n - 1) ** ((self.d + d_prime - 1) * L)
        hits_distinct_mean = float(distinct_hits.mean())
        report = summarize_hits(
            params,
            hits,
            all_distinct,
            L=L,
            d_prime=d_prime,
            hits_distinct_mean=hits_distinct_mean,
            envelope_ratio=hits_distinct_mean / envelope,
            intersect_fraction=float(np.mean(hits > 0)),
            distinct_hits=distinct_hits,
        )
        logger.debug(
            "L=%d: a_L=%d, b_L=%d, mean hits %.4f, intersect fraction %.4f.",
            L,
            a_L,
            b_L,
            report.empirical_mean,
            report.intersect_fraction,
        )
        self.events["length_completed"].send(self, L=L, report=report)
        return report

    def run(self) -> list[ConcentrationReport]:
        d_prime = self.language_density()
        self.check_hypotheses(d_prime)
        return [self.run_length(L, d_prime) for L in self.L_values]


def run_intersection_experiment(
    fixed_set: BAutomaton,
    n: int,
    d: float,
    L_values: Sequence[int],
    trials: int,
    seed: int,
    epsilon=0.5,
    cap: int = DEFAULT_RELATOR_CAP,
    threads: int = 1,
) -> list[ConcentrationReport]:
    if fixed_set.alphabet.n != n:
        raise ValueError(f"The fixed set is over n={fixed_set.alphabet.n} generators, expected n={n}.")
    experiment = IntersectionExperiment(fixed_set, d, L_values, trials, seed, epsilon, cap, threads)
    return experiment.run()
