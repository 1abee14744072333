import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Callable

import click

from pyrandgroups.automata import BAutomaton, as_rational, make_sign_automaton
from pyrandgroups.order import SignVector, all_sign_pairs, certify_associated, positive_witness_mask
from pyrandgroups.sampler import Presentation, check_seed, compute_relator_count, derive_rng
from pyrandgroups.serialization import load_artifact
from pyrandgroups.stats import CSV_COLUMNS, IntersectionExperiment
from pyrandgroups.words import Alphabet, sample_reduced_batch, words_from_indices
from .app import CliContext, console, main
from .commands import make_progress, write_csv_with_manifest

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

CERTIFICATE_RATE = "certificate-rate"
INTERSECTION = "intersection"
PIPELINE_MODES = (CERTIFICATE_RATE, INTERSECTION)
PIPELINE_STREAM = 3

CERTIFICATE_RATE_COLUMNS = (
    "kind",
    "L",
    "trial",
    "b_L",
    "witness_fraction",
    "certified",
    "associated_certified",
)
INTERSECTION_COLUMNS = (
    "kind",
    "L",
    "trial",
    "hits",
    "distinct_hits",
    "intersects",
    *CSV_COLUMNS[1:],
    "intersect_fraction",
)


@dataclass(frozen=True)
class PipelineConfig:
    """A sweep over relator lengths, read from TOML."""

    n: int
    d: float
    L: tuple[int, ...]
    trials: int
    seed: int
    B: int | None = None
    mode: str = CERTIFICATE_RATE
    fixed_set: str | dict | None = field(default=None, compare=False)
    epsilon: str = "1/2"

    REQUIRED_KEYS = ("n", "d", "L", "trials", "seed")
    OPTIONAL_KEYS = ("B", "mode", "fixed_set", "epsilon")

    def __post_init__(self):
        object.__setattr__(self, "L", tuple(int(L) for L in self.L))
        if not self.L:
            raise ValueError("The sweep needs at least one length in L.")
        if any(L < 1 for L in self.L):
            raise ValueError(f"Lengths must be positive, got {list(self.L)}.")
        if self.n < 1:
            raise ValueError(f"Generator count must be at least 1, got n={self.n}.")
        if not 0 < self.d < 1:
            raise ValueError(f"Density must lie strictly between 0 and 1, got d={self.d}.")
        if self.trials < 1:
            raise ValueError(f"trials must be at least 1, got {self.trials}.")
        check_seed(self.seed)
        if self.B is not None and self.B < 1:
            raise ValueError(f"Block length must be at least 1, got B={self.B}.")
        if self.mode not in PIPELINE_MODES:
            raise ValueError(f"Unknown mode {self.mode!r}; expected one of {', '.join(PIPELINE_MODES)}.")
        if as_rational(self.epsilon) <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}.")

    @classmethod
    def from_mapping(cls, data: dict) -> "PipelineConfig":
        unknown = set(data) - set(cls.REQUIRED_KEYS) - set(cls.OPTIONAL_KEYS)
        if unknown:
            raise ValueError(f"Unknown pipeline keys: {', '.join(sorted(unknown))}.")
        missing = [key for key in cls.REQUIRED_KEYS if key not in data]
        if missing:
            raise ValueError(f"Missing pipeline keys: {', '.join(missing)}.")
        L = data["L"]
        return cls(
            n=int(data["n"]),
            d=float(data["d"]),
            L=tuple(L) if isinstance(L, list) else (L,),
            trials=int(data["trials"]),
            seed=int(data["seed"]),
            B=data.get("B"),
            mode=data.get("mode", CERTIFICATE_RATE),
            fixed_set=data.get("fixed_set"),
            epsilon=str(data.get("epsilon", "1/2")),
        )

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "L": list(self.L),
            "trials": self.trials,
            "seed": self.seed,
            "B": self.B,
            "mode": self.mode,
            "fixed_set": self.fixed_set,
            "epsilon": self.epsilon,
        }


def load_pipeline_config(path: str | Path) -> PipelineConfig:
    with open(path, "rb") as f:
        try:
            data = tomllib.load(f)
        except tomllib.TOMLDecodeError as error:
            raise ValueError(f"{path} is not valid TOML: {error}") from error
    return PipelineConfig.from_mapping(data)


def resolve_fixed_set(config: PipelineConfig, base_dir: Path) -> tuple[BAutomaton, list[Path]]:
    """The automaton of an intersection sweep, and the files it was read from.

    ``fixed_set`` is a path to automaton JSON, a table ``{signs = "+-", i = 1}``
    or absent, which means A_{(+,...,+),1}.
    """
    if config.fixed_set is None:
        return make_sign_automaton((1,) * config.n, 1), []
    if isinstance(config.fixed_set, str):
        path = base_dir / config.fixed_set
        automaton = load_artifact(str(path))
        if not isinstance(automaton, BAutomaton):
            raise ValueError(f"{path} does not hold a b-automaton.")
        if automaton.alphabet.n != config.n:
            raise ValueError(f"The fixed set is over n={automaton.alphabet.n}, the sweep over n={config.n}.")
        return automaton, [path]
    signs = SignVector.from_text(config.fixed_set["signs"])
    if signs.n != config.n:
        raise ValueError(f"Sign vector {signs} does not have n={config.n} signs.")
    return make_sign_automaton(signs.signs, int(config.fixed_set.get("i", 1))), []


def certificate_rate_trial(config: PipelineConfig, L: int, b_L: int, trial: int) -> dict:
    """Sample one relator set and record which (eps, i) it has witnesses for."""
    alphabet = Alphabet(config.n)
    rng = derive_rng(config.seed, PIPELINE_STREAM, L, trial)
    rows = sample_reduced_batch(alphabet, L, b_L, rng)
    pairs = list(all_sign_pairs(config.n))
    hits = [bool(positive_witness_mask(rows, alphabet, signs, i).any()) for signs, i in pairs]
    row = {
        "kind": "trial",
        "L": L,
        "trial": trial,
        "b_L": b_L,
        "witness_fraction": sum(hits) / len(pairs),
        "certified": int(all(hits)),
        "associated_certified": "",
    }
    if config.B is not None:
        presentation = Presentation(alphabet, tuple(words_from_indices(alphabet, rows)))
        row["associated_certified"] = int(certify_associated(presentation, config.B).certified)
    return row


def _mean(values) -> float:
    values = list(values)
    return float(Fraction(sum(Fraction(value) for value in values), len(values)))


def run_certificate_rate(
    config: PipelineConfig, threads: int = 1, on_trial: Callable[[], None] | None = None
) -> list[dict]:
    rows = []
    for L in config.L:
        b_L = compute_relator_count(config.n, config.d, L)

        def run_trial(trial: int) -> dict:
            row = certificate_rate_trial(config, L, b_L, trial)
            if on_trial is not None:
                on_trial()
            return row

        with ThreadPoolExecutor(max_workers=threads) as executor:
            trial_rows = list(executor.map(run_trial, range(config.trials)))
        rows.extend(trial_rows)
        rows.append(
            {
                "kind": "aggregate",
                "L": L,
                "trial": "",
                "b_L": b_L,
                "witness_fraction": _mean(row["witness_fraction"] for row in trial_rows),
                "certified": _mean(row["certified"] for row in trial_rows),
                "associated_certified": (
                    "" if config.B is None else _mean(row["associated_certified"] for row in trial_rows)
                ),
            }
        )
    return rows


def run_intersection_sweep(
    config: PipelineConfig,
    fixed_set: BAutomaton,
    threads: int = 1,
    on_trial: Callable[[], None] | None = None,
) -> list[dict]:
    experiment = IntersectionExperiment(
        fixed_set, config.d, config.L, config.trials, config.seed, as_rational(config.epsilon), threads=threads
    )
    if on_trial is not None:
        experiment.events["trial_completed"].connect(lambda sender, **kwargs: on_trial(), weak=False)
    rows = []
    for report in experiment.run():
        for trial, (hits, distinct_hits) in enumerate(zip(report.hits.tolist(), report.distinct_hits.tolist())):
            rows.append(
                {
                    "kind": "trial",
                    "L": report.L,
                    "trial": trial,
                    "hits": hits,
                    "distinct_hits": distinct_hits,
                    "intersects": int(hits > 0),
                }
            )
        rows.append(
            {
                "kind": "aggregate",
                "trial": "",
                **report.to_row(),
                "intersect_fraction": report.intersect_fraction,
            }
        )
    return rows


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--out", type=click.Path(dir_okay=False), required=True, help="CSV output path.")
@click.pass_obj
def pipeline(state: CliContext, config_path, out):
    """Run a sweep over L from a TOML config and write one CSV row per (L, trial)."""
    config = load_pipeline_config(config_path)
    inputs = [Path(config_path)]
    with make_progress() as progress:
        task = progress.add_task(config.mode, total=config.trials * len(config.L))

        def advance():
            progress.advance(task)

        if config.mode == CERTIFICATE_RATE:
            rows = run_certificate_rate(config, state.threads, advance)
            columns = CERTIFICATE_RATE_COLUMNS
        else:
            fixed_set, fixed_inputs = resolve_fixed_set(config, Path(config_path).parent)
            inputs.extend(fixed_inputs)
            rows = run_intersection_sweep(config, fixed_set, state.threads, advance)
            columns = INTERSECTION_COLUMNS

    parameters = {**config.to_dict(), "json_indent": state.json_indent}
    write_csv_with_manifest(out, rows, columns, state, "pipeline", parameters, config.seed, inputs)
    console.print(f"Wrote {len(rows)} rows to {out}.")
