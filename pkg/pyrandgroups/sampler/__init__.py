from .rng import derive_rng, check_seed, GENERATOR_NAME
from .relator_count import compute_relator_count, density_as_rational, DEFAULT_RELATOR_CAP
from .sampler_config import SamplerConfig
from .presentation import Presentation
from .presentation_checker import PresentationChecker
from .sampler import sample_relator_set, sample_relator_indices

__all__ = [
    "derive_rng",
    "check_seed",
    "GENERATOR_NAME",
    "compute_relator_count",
    "density_as_rational",
    "DEFAULT_RELATOR_CAP",
    "SamplerConfig",
    "Presentation",
    "PresentationChecker",
    "sample_relator_set",
    "sample_relator_indices",
]
