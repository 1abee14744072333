from .app import main, CliError, EXIT_OK, EXIT_INPUT_ERROR, EXIT_NO_CERTIFICATE, EXIT_BUDGET_EXCEEDED
from .manifest import RunManifest, file_digest, manifest_path
from . import commands, pipeline

__all__ = [
    "main",
    "CliError",
    "EXIT_OK",
    "EXIT_INPUT_ERROR",
    "EXIT_NO_CERTIFICATE",
    "EXIT_BUDGET_EXCEEDED",
    "RunManifest",
    "file_digest",
    "manifest_path",
    "commands",
    "pipeline",
]
