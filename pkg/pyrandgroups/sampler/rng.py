import numpy as np

SEED_BITS = 64
GENERATOR_NAME = "philox4x64/SeedSequence"


def check_seed(seed: int):
    if not 0 <= seed < 2**SEED_BITS:
        raise ValueError(f"Seeds must be non-negative {SEED_BITS}-bit integers, got {seed}.")


def derive_rng(seed: int, *keys: int) -> np.random.Generator:
    """A counter-based generator for the stream identified by ``(seed, *keys)``.

    Streams for different key tuples are independent, so trial ``i`` of an
    experiment can be replayed without running trials ``0 .. i-1``.
    """
    check_seed(seed)
    for key in keys:
        if key < 0:
            raise ValueError(f"Stream keys must be non-negative, got {key}.")
    sequence = np.random.SeedSequence([seed, *keys])
    return np.random.Generator(np.random.Philox(sequence))
