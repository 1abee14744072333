__version__ = "0.1.0"

from .words import Alphabet, Word, count_reduced, enumerate_reduced, sample_reduced
from .sampler import Presentation, SamplerConfig, compute_relator_count, derive_rng, sample_relator_set
from .automata import BAutomaton, make_sign_automaton, count_language_words, count_language_reduced
from .order import SignVector, ObstructionCertificate, certify_obstruction, certify_via_languages
from .blocks import BlockAlphabet, build_associated_set
from .stats import HitModelParams, run_concentration_experiment, run_intersection_experiment
from .serialization import (
    load_artifact,
    save_artifact,
    artifact_from_dict,
    register_artifact_deserializer,
)
from .errors import InvalidWordError, SizeLimitError, BudgetExceededError, PrecisionError

__all__ = [
    "__version__",
    "Alphabet",
    "Word",
    "count_reduced",
    "enumerate_reduced",
    "sample_reduced",
    "Presentation",
    "SamplerConfig",
    "compute_relator_count",
    "derive_rng",
    "sample_relator_set",
    "BAutomaton",
    "make_sign_automaton",
    "count_language_words",
    "count_language_reduced",
    "SignVector",
    "ObstructionCertificate",
    "certify_obstruction",
    "certify_via_languages",
    "BlockAlphabet",
    "build_associated_set",
    "HitModelParams",
    "run_concentration_experiment",
    "run_intersection_experiment",
    "load_artifact",
    "save_artifact",
    "artifact_from_dict",
    "register_artifact_deserializer",
    "InvalidWordError",
    "SizeLimitError",
    "BudgetExceededError",
    "PrecisionError",
]
