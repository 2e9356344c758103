"""Command-line pipeline: run configuration and command dispatch."""

from chshtrap.pipeline.config import Command, OutputFormat, RunConfig, build_run_config
from chshtrap.pipeline.runner import (
    EXIT_NUMERICAL,
    EXIT_OK,
    EXIT_USAGE,
    RunPipeline,
    render,
    run,
)

__all__ = [
    "EXIT_NUMERICAL",
    "EXIT_OK",
    "EXIT_USAGE",
    "Command",
    "OutputFormat",
    "RunConfig",
    "RunPipeline",
    "build_run_config",
    "render",
    "run",
]
