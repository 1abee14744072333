import hashlib
import json
from dataclasses import dataclass, field
from pathlib import Path

from pyrandgroups.sampler import GENERATOR_NAME

MANIFEST_SUFFIX = ".manifest.json"


def file_digest(path: str | Path) -> str:
    """SHA256 of a file's bytes."""
    digest = hashlib.sha256()
    with open(path, "rb") as f:
        for chunk in iter(lambda: f.read(1 << 16), b""):
            digest.update(chunk)
    return digest.hexdigest()


def manifest_path(output: str | Path) -> Path:
    output = Path(output)
    return output.with_name(output.name + MANIFEST_SUFFIX)


@dataclass(frozen=True)
class RunManifest:
    """Everything needed to rerun a command and get the same bytes. Holds no timestamps."""

    command: str
    parameters: dict = field(compare=False)
    seed: int | None
    version: str
    generator: str = GENERATOR_NAME
    inputs: dict[str, str] = field(default_factory=dict)
    outputs: dict[str, str] = field(default_factory=dict)

    @classmethod
    def for_run(
        cls, command: str, parameters: dict, seed: int | None, inputs=(), outputs=()
    ) -> "RunManifest":
        from pyrandgroups import __version__

        return cls(
            command=command,
            parameters=dict(parameters),
            seed=seed,
            version=__version__,
            inputs={str(path): file_digest(path) for path in inputs},
            outputs={str(path): file_digest(path) for path in outputs},
        )

    def to_dict(self) -> dict:
        return {
            "__class__": self.__class__.__name__,
            "command": self.command,
            "parameters": self.parameters,
            "seed": self.seed,
            "version": self.version,
            "generator": self.generator,
            "inputs": self.inputs,
            "outputs": self.outputs,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunManifest":
        return cls(
            command=data["command"],
            parameters=dict(data["parameters"]),
            seed=data.get("seed"),
            version=data["version"],
            generator=data.get("generator", GENERATOR_NAME),
            inputs=dict(data.get("inputs", {})),
            outputs=dict(data.get("outputs", {})),
        )

    def write_next_to(self, output: str | Path, indent: int = 2) -> Path:
        path = manifest_path(output)
        with open(path, "w") as f:
            f.write(json.dumps(self.to_dict(), indent=indent, sort_keys=True) + "\n")
        return path

    def matches_outputs(self) -> bool:
        """Do the recorded output digests still match the files on disk."""
        return all(
            Path(path).exists() and file_digest(path) == digest for path, digest in self.outputs.items()
        )
