"""
Command runner for chsh-trap.

Dispatches a validated RunConfig to the analysis layer and writes one
CSV or JSON document to stdout or the configured path. Output is fully
determined by the config, so identical runs produce identical bytes.
"""

import io
import json
import logging
import sys
from pathlib import Path
from typing import Any, TextIO

import numpy as np
import pandas as pd

from chshtrap.analysis import (
    critical_purity,
    figure_curves,
    protection_time,
    records_to_frame,
    samples_to_frame,
    sweep,
    threshold_population,
    time_series,
)
from chshtrap.chsh import BellEngine
from chshtrap.core.constants import BOUND_SLACK, CSV_FLOAT_FORMAT, ORACLE_TOL
from chshtrap.core.exceptions import (
    ConfigurationError,
    ConsistencyError,
    DomainError,
    OptimizationError,
)
from chshtrap.pipeline.config import Command, OutputFormat, RunConfig
from chshtrap.states import as_x_view, build_ewl, random_x_state

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2

Document = pd.DataFrame | dict[str, Any]


class RunPipeline:
    """
    Runs one command of the front end.

    Each command returns a document (a DataFrame for tabular output or a
    mapping for JSON-only summaries) which is then rendered once.
    """

    def __init__(self, config: RunConfig) -> None:
        self.config = config

    def run(self) -> Document:
        handlers = {
            Command.EWL: self._ewl,
            Command.SWEEP: self._sweep,
            Command.THRESHOLD: self._threshold,
            Command.CRITICAL_PURITY: self._critical_purity,
            Command.EVOLVE: self._evolve,
            Command.ORACLE_CHECK: self._oracle_check,
        }
        logger.info(f"Running {self.config.command.value}")
        return handlers[self.config.command]()

    def _ewl(self) -> Document:
        state = build_ewl(self.config.params)
        view = as_x_view(state)
        if self.config.format is OutputFormat.JSON:
            evaluation = BellEngine(brute_force=False).evaluate(view, 1.0)
            return {
                "params": self.config.params.to_dict(),
                "state": state.to_dict(),
                "x_view": view.to_dict(),
                "evaluation": evaluation.to_dict(),
            }
        rows = [
            {"row": i, "col": j, "re": state[i, j].real, "im": state[i, j].imag}
            for i in range(4)
            for j in range(4)
        ]
        return pd.DataFrame(rows, columns=["row", "col", "re", "im"])

    def _sweep(self) -> Document:
        config = self.config
        if config.purities:
            return figure_curves(
                config.family,
                config.alpha,
                purities=config.purities,
                points=config.points,
                delta=config.delta,
                workers=config.workers,
                evaluators=config.evaluators,
            )
        records = sweep(
            config.params,
            points=config.points,
            evaluators=config.evaluators,
            workers=config.workers,
        )
        return records_to_frame(records)

    def _threshold(self) -> Document:
        rows = []
        for evaluator in self.config.evaluators:
            result = threshold_population(self.config.params, evaluator, points=self.config.points)
            rows.append(result.to_dict())
        return pd.DataFrame(rows, columns=["evaluator", "exists", "x_star"])

    def _critical_purity(self) -> Document:
        config = self.config
        rows = []
        for evaluator in config.evaluators:
            r_crit = critical_purity(
                config.family,
                config.alpha,
                evaluator=evaluator,
                delta=config.delta,
                points=config.points,
            )
            rows.append(
                {
                    "family": config.family.value,
                    "alpha": config.alpha,
                    "evaluator": evaluator.value,
                    "r_crit": r_crit,
                }
            )
        return pd.DataFrame(rows, columns=["family", "alpha", "evaluator", "r_crit"])

    def _evolve(self) -> Document:
        config = self.config
        model = config.reservoir
        samples = time_series(config.params, model, config.time_grid, workers=config.workers)
        frame = samples_to_frame(samples)

        protection = {}
        for evaluator in config.evaluators:
            t_loss = protection_time(config.params, model, evaluator)
            protection[evaluator.value] = t_loss
            summary = "protected for all t" if t_loss is None else f"lost at t={t_loss:.10g}"
            logger.info(f"{model.describe()}: {evaluator.value} violation {summary}")

        if config.format is OutputFormat.JSON:
            return {
                "reservoir": model.describe(),
                "protection_time": protection,
                "samples": frame.to_dict(orient="records"),
            }
        return frame

    def _oracle_check(self) -> Document:
        config = self.config
        rng = np.random.default_rng(config.state_seed)
        engine = BellEngine(
            brute_force=True,
            restarts=config.restarts,
            grid_density=config.grid_density,
            seed=config.seed,
            workers=config.workers,
        )

        rows = []
        for index in range(config.n):
            view = as_x_view(random_x_state(rng))
            evaluation = engine.evaluate(view, 1.0)
            brute = float(evaluation.brute_force_max or 0.0)
            rows.append(
                {
                    "index": index,
                    "restricted_max": evaluation.restricted_max,
                    "horodecki_max": evaluation.horodecki_max,
                    "brute_force_max": brute,
                    "discrepancy": abs(brute - evaluation.horodecki_max),
                    "restricted_le_horodecki": (
                        evaluation.restricted_max <= evaluation.horodecki_max + BOUND_SLACK
                    ),
                }
            )

        frame = pd.DataFrame(rows)
        max_discrepancy = float(frame["discrepancy"].max())
        ordered = bool(frame["restricted_le_horodecki"].all())
        logger.info(
            f"Oracle check over {config.n} states: max |brute - horodecki| = "
            f"{max_discrepancy:.3e}, restricted <= horodecki for all: {ordered}"
        )
        if config.format is OutputFormat.JSON:
            return {
                "n": config.n,
                "seed": config.seed,
                "state_seed": config.state_seed,
                "max_discrepancy": max_discrepancy,
                "restricted_le_horodecki": ordered,
                "passed": max_discrepancy <= ORACLE_TOL and ordered,
                "states": frame.to_dict(orient="records"),
            }
        return frame


def render(document: Document, output_format: OutputFormat) -> str:
    """Render a document as CSV or JSON text."""
    if output_format is OutputFormat.JSON:
        if isinstance(document, pd.DataFrame):
            # Missing evaluator columns become null
            return document.to_json(orient="records", indent=2, double_precision=15) + "\n"
        return json.dumps(document, indent=2, default=str) + "\n"

    if not isinstance(document, pd.DataFrame):
        raise ConfigurationError("This command has no CSV form", config_key="format")
    buffer = io.StringIO()
    document.to_csv(buffer, float_format=CSV_FLOAT_FORMAT, index=False)
    return buffer.getvalue()


def write_output(text: str, out: Path | None, stream: TextIO) -> None:
    if out is None:
        stream.write(text)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    logger.info(f"Wrote {out}")


def _oracle_failures(document: Document) -> str | None:
    if isinstance(document, pd.DataFrame):
        max_discrepancy = float(document["discrepancy"].max())
        ordered = bool(document["restricted_le_horodecki"].all())
    else:
        max_discrepancy = float(document["max_discrepancy"])
        ordered = bool(document["restricted_le_horodecki"])
    if max_discrepancy > ORACLE_TOL:
        return f"max |brute - horodecki| = {max_discrepancy:.3e} exceeds {ORACLE_TOL:g}"
    if not ordered:
        return "restricted maximum exceeds the Horodecki maximum"
    return None


def run(config: RunConfig, stream: TextIO | None = None) -> int:
    """
    Execute one command.

    Args:
        config: Validated run configuration
        stream: Output stream when no path is configured (default stdout)

    Returns:
        Exit status: 0 success, 1 numerical failure, 2 usage error
    """
    stream = stream or sys.stdout
    try:
        document = RunPipeline(config).run()
        write_output(render(document, config.format), config.out, stream)
    except (ConfigurationError, DomainError) as e:
        key = getattr(e, "config_key", None) or getattr(e, "parameter", None)
        logger.error(f"Usage error ({key}): {e}" if key else f"Usage error: {e}")
        return EXIT_USAGE
    except OptimizationError as e:
        logger.error(f"Optimization failed: {e} {e.diagnostics}")
        return EXIT_NUMERICAL
    except ConsistencyError as e:
        logger.error(f"Consistency check failed: {e} (expected={e.expected}, actual={e.actual})")
        return EXIT_NUMERICAL

    if config.command is Command.ORACLE_CHECK:
        failure = _oracle_failures(document)
        if failure:
            logger.error(f"Oracle check failed: {failure}")
            return EXIT_NUMERICAL
    return EXIT_OK
