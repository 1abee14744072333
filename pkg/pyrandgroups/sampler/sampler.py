import numpy as np

from pyrandgroups.words import Alphabet, sample_reduced_batch, words_from_indices
from .presentation import Presentation
from .rng import derive_rng
from .sampler_config import SamplerConfig


def sample_relator_indices(config: SamplerConfig, rng: np.random.Generator | None = None) -> np.ndarray:
    """The relator tuple as a (b_L x L) array of letter indices, in sampling order."""
    if rng is None:
        rng = derive_rng(config.seed)
    return sample_reduced_batch(Alphabet(config.n), config.L, config.relator_count, rng)


def sample_relator_set(config: SamplerConfig, rng: np.random.Generator | None = None) -> Presentation:
    """A random set of relators: b_L independent uniform draws from R_L.

    Without an explicit ``rng`` the stream is derived from ``config.seed`` alone,
    so equal configs give equal presentations.
    """
    alphabet = Alphabet(config.n)
    rows = sample_relator_indices(config, rng)
    return Presentation(alphabet, tuple(words_from_indices(alphabet, rows)), config)
