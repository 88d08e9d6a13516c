import logging
import sys
from collections.abc import Callable, Sequence

import click
from pydantic import BaseModel, ValidationError as PydanticValidationError

from ginv.errors import BoundExceeded, GinvError
from ginv.jobs import Command, JobSpec, Outcome, RunResult
from ginv.sft import SftMatrix
from ginv.utils import load_document, to_json, validate_factors

logger = logging.getLogger(__name__)

Handler = Callable[[JobSpec, list[list[SftMatrix]]], Outcome]

HANDLERS: dict[Command, Handler] = {}

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT_ERROR = 2
EXIT_BOUND_EXCEEDED = 3


class Settings(BaseModel):
    aut_bound: int | None = None
    tuple_bound: int | None = None
    index_bound: int | None = None
    output_format: str = "text"


def handler(command: Command):
    def register(fn: Handler) -> Handler:
        HANDLERS[command] = fn
        return fn
    return register


def run(job: JobSpec) -> RunResult:
    """Execute one job and map its outcome to rendered output and an exit code."""
    try:
        factor_lists = [validate_factors(factors) for factors in job.inputs]
        outcome = HANDLERS[job.command](job, factor_lists)
    except BoundExceeded as e:
        diagnostics = f"error: {e}"
        if e.passed_filters:
            diagnostics += f" (passed filters: {', '.join(e.passed_filters)})"
        return RunResult(output="", exit_code=EXIT_BOUND_EXCEEDED, diagnostics=diagnostics)
    except GinvError as e:
        return RunResult(output="", exit_code=EXIT_INPUT_ERROR, diagnostics=f"error: {e}")
    output = to_json(outcome.payload) if job.output_format == "json" else outcome.text
    exit_code = EXIT_NEGATIVE if outcome.verdict is False else EXIT_OK
    logger.debug("%s finished with exit code %d", job.command.value, exit_code)
    return RunResult(output=output, exit_code=exit_code)


def emit(settings: Settings, command: Command, *, sources: Sequence[str] = (), **params):
    """Build a job from command-line arguments, run it and exit with its code."""
    try:
        job = JobSpec(
            command=command,
            inputs=[load_document(source).factors for source in sources],
            output_format=settings.output_format,
            aut_bound=settings.aut_bound,
            tuple_bound=settings.tuple_bound,
            index_bound=settings.index_bound,
            **params,
        )
    except (GinvError, PydanticValidationError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_INPUT_ERROR)
    result = run(job)
    if result.output:
        click.echo(result.output)
    if result.diagnostics:
        click.echo(result.diagnostics, err=True)
    sys.exit(result.exit_code)
