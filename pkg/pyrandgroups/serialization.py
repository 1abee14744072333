import json
from typing import Any, Callable

ARTIFACT_DESERIALIZERS: dict[str, Callable[[dict], Any]] = {}
DEFAULT_JSON_INDENT = 2


def register_artifact_deserializer(class_name: str, deserializer: Callable[[dict], Any]):
    """Register a deserializer function for an artifact class."""
    ARTIFACT_DESERIALIZERS[class_name] = deserializer


def _detect_class(data: dict) -> str:
    """Older or hand-written files may omit ``__class__``; guess it from the schema."""
    if "__class__" in data:
        return data["__class__"]
    if "relators" in data:
        return "AssociatedSet" if "block_alphabet" in data else "Presentation"
    if "sigma" in data and "sigma_empty" in data:
        return "BAutomaton"
    raise ValueError("Cannot tell which artifact this is: no '__class__' key and no known fields.")


def artifact_from_dict(data: dict):
    """Deserialize an artifact from a dictionary."""
    if not isinstance(data, dict):
        raise ValueError(f"Artifacts are JSON objects, got {type(data).__name__}.")
    class_name = _detect_class(data)
    deserializer = ARTIFACT_DESERIALIZERS.get(class_name)
    if deserializer:
        return deserializer(data)
    raise ValueError(f"Unknown or unregistered artifact class: {class_name}")


def dumps_artifact(artifact, indent: int = DEFAULT_JSON_INDENT) -> str:
    """The exact text :func:`save_artifact` writes; sorted keys make it reproducible."""
    return json.dumps(artifact.to_dict(), indent=indent, sort_keys=True) + "\n"


# Internal deserializers for pyrandgroups artifacts


def _initialize_pyrandgroups_deserializers():
    """Registers the deserializers for the core pyrandgroups classes."""

    def _deserialize_presentation(data):
        from .sampler import Presentation

        return Presentation.from_dict(data)

    def _deserialize_sampler_config(data):
        from .sampler import SamplerConfig

        return SamplerConfig.from_dict(data)

    def _deserialize_b_automaton(data):
        from .automata import BAutomaton

        return BAutomaton.from_dict(data)

    def _deserialize_certificate(data):
        from .order import ObstructionCertificate

        return ObstructionCertificate.from_dict(data)

    def _deserialize_associated_set(data):
        from .blocks import AssociatedSet

        return AssociatedSet.from_dict(data)

    def _deserialize_hit_model_params(data):
        from .stats import HitModelParams

        return HitModelParams.from_dict(data)

    def _deserialize_run_manifest(data):
        from .cli.manifest import RunManifest

        return RunManifest.from_dict(data)

    register_artifact_deserializer("Presentation", _deserialize_presentation)
    register_artifact_deserializer("SamplerConfig", _deserialize_sampler_config)
    register_artifact_deserializer("BAutomaton", _deserialize_b_automaton)
    register_artifact_deserializer("ObstructionCertificate", _deserialize_certificate)
    register_artifact_deserializer("AssociatedSet", _deserialize_associated_set)
    register_artifact_deserializer("HitModelParams", _deserialize_hit_model_params)
    register_artifact_deserializer("RunManifest", _deserialize_run_manifest)


def load_artifact(filepath: str):
    """Load an artifact from a JSON file."""
    with open(filepath, "r") as f:
        data = json.load(f)
    return artifact_from_dict(data)


def save_artifact(artifact, filepath: str, indent: int = DEFAULT_JSON_INDENT):
    """Save an artifact to a JSON file."""
    with open(filepath, "w") as f:
        f.write(dumps_artifact(artifact, indent))


_initialize_pyrandgroups_deserializers()
