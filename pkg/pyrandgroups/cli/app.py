import json
import logging
from dataclasses import dataclass
from pathlib import Path

import click
from rich.console import Console
from rich.logging import RichHandler

from pyrandgroups import __version__
from pyrandgroups.errors import BudgetExceededError, SizeLimitError
from pyrandgroups.serialization import DEFAULT_JSON_INDENT, artifact_from_dict, dumps_artifact
from .manifest import RunManifest

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_NO_CERTIFICATE = 3
EXIT_BUDGET_EXCEEDED = 4

console = Console()
logger = logging.getLogger("pyrandgroups")


class CliError(click.ClickException):
    """A failure reported to the user with a chosen exit code."""

    def __init__(self, message: str, exit_code: int = EXIT_INPUT_ERROR):
        super().__init__(message)
        self.exit_code = exit_code


class ExitCodeGroup(click.Group):
    """Maps library errors onto the documented exit codes."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.ClickException, click.exceptions.Exit, click.Abort):
            raise
        except (BudgetExceededError, SizeLimitError) as error:
            raise CliError(str(error), EXIT_BUDGET_EXCEEDED) from error
        except (ValueError, KeyError, OSError) as error:
            raise CliError(str(error), EXIT_INPUT_ERROR) from error


@dataclass
class CliContext:
    seed: int
    threads: int
    json_indent: int
    verbose: bool

    def resolve_seed(self, seed: int | None) -> int:
        return self.seed if seed is None else seed


def setup_logging(verbose: bool):
    root = logging.getLogger()
    root.handlers = [RichHandler(console=Console(stderr=True), show_path=False)]
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
    logging.captureWarnings(True)


def load_json_artifact(path: str):
    try:
        with open(path, "r") as f:
            data = json.load(f)
    except json.JSONDecodeError as error:
        raise CliError(f"{path} is not valid JSON: {error}") from error
    return artifact_from_dict(data)


def write_artifact(
    artifact,
    out: str | None,
    state: CliContext,
    command: str,
    parameters: dict,
    seed: int | None = None,
    inputs=(),
):
    """Write to ``out`` with a manifest next to it, or print when no path is given."""
    text = dumps_artifact(artifact, state.json_indent)
    if out is None:
        click.echo(text, nl=False)
        return
    Path(out).write_text(text)
    manifest = RunManifest.for_run(
        command, {**parameters, "json_indent": state.json_indent}, seed, inputs=inputs, outputs=[out]
    )
    manifest.write_next_to(out, state.json_indent)
    logger.info("Wrote %s and its manifest.", out)


@click.group(cls=ExitCodeGroup)
@click.option("--seed", type=click.IntRange(min=0), default=0, show_default=True, help="Base seed.")
@click.option("--threads", type=click.IntRange(min=1), default=1, show_default=True, help="Worker threads.")
@click.option(
    "--json-indent",
    type=click.IntRange(min=0),
    default=DEFAULT_JSON_INDENT,
    show_default=True,
    help="Indentation of JSON outputs.",
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging.")
@click.version_option(version=__version__)
@click.pass_context
def main(ctx: click.Context, seed: int, threads: int, json_indent: int, verbose: bool):
    """Random presentations, b-automata and left-orderability obstructions."""
    setup_logging(verbose)
    ctx.obj = CliContext(seed=seed, threads=threads, json_indent=json_indent, verbose=verbose)
