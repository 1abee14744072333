from .hit_model import (
    HitModelParams,
    moments,
    chebyshev_tail,
    chebyshev_window_bound,
    simplified_window_bound,
    distinctness_probability,
    distinctness_rate,
)
from .report import ConcentrationReport, summarize_hits, CSV_COLUMNS
from .experiments import (
    ConcentrationExperiment,
    IntersectionExperiment,
    run_concentration_experiment,
    run_intersection_experiment,
    TRIAL_BLOCK_SIZE,
)

__all__ = [
    "HitModelParams",
    "moments",
    "chebyshev_tail",
    "chebyshev_window_bound",
    "simplified_window_bound",
    "distinctness_probability",
    "distinctness_rate",
    "ConcentrationReport",
    "summarize_hits",
    "CSV_COLUMNS",
    "ConcentrationExperiment",
    "IntersectionExperiment",
    "run_concentration_experiment",
    "run_intersection_experiment",
    "TRIAL_BLOCK_SIZE",
]
