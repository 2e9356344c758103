"""
Run configuration of the command-line front end.

Values are merged from lowest to highest precedence:
1. Built-in field defaults
2. config/defaults.yaml
3. A flat key=value file (--config PATH)
4. Explicit flags
"""

import logging
from enum import Enum
from pathlib import Path
from typing import Any

from dotenv import dotenv_values
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from chshtrap.core.config import load_config
from chshtrap.core.constants import (
    DEFAULT_GRID_DENSITY,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    DEFAULT_SWEEP_POINTS,
    MAX_ENTANGLED_ALPHA,
)
from chshtrap.core.exceptions import ConfigurationError
from chshtrap.core.types import EWLParams, Evaluator, StateFamily
from chshtrap.reservoir import ReservoirKind, ReservoirModel, TimeGrid, reservoir_from_mapping

logger = logging.getLogger(__name__)


class Command(str, Enum):
    """Sub-commands of the front end."""

    EWL = "ewl"
    SWEEP = "sweep"
    THRESHOLD = "threshold"
    CRITICAL_PURITY = "critical-purity"
    EVOLVE = "evolve"
    ORACLE_CHECK = "oracle-check"


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    """Validated parameters of one run."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    command: Command

    # State
    family: StateFamily = StateFamily.PHI
    r: float = Field(default=1.0, ge=0.0, le=1.0)
    alpha: float = Field(default=MAX_ENTANGLED_ALPHA, ge=-1.0, le=1.0)
    delta: float = 0.0

    # Reservoir and time grid
    model: ReservoirKind = ReservoirKind.MARKOVIAN
    gamma0: float = Field(default=1.0, gt=0.0)
    lambda_: float = Field(default=0.1, gt=0.0, alias="lambda")
    w: float = Field(default=0.95, ge=0.0, le=1.0)
    t0: float = Field(default=0.0, ge=0.0)
    t1: float = Field(default=10.0, gt=0.0)
    samples: int = Field(default=101, ge=2)

    # Evaluation
    points: int = Field(default=DEFAULT_SWEEP_POINTS, ge=2)
    evaluator: Evaluator = Evaluator.RESTRICTED
    both_evaluators: bool = False
    purities: tuple[float, ...] | None = None

    # Oracle
    seed: int = DEFAULT_SEED
    state_seed: int = DEFAULT_SEED
    n: int = Field(default=100, ge=1)
    restarts: int = Field(default=DEFAULT_RESTARTS, ge=0)
    grid_density: int = Field(default=DEFAULT_GRID_DENSITY, ge=2)
    workers: int = Field(default=1, ge=1)

    # Output
    format: OutputFormat = OutputFormat.CSV
    out: Path | None = None

    @field_validator("family", "evaluator", "model", "format", mode="before")
    @classmethod
    def lowercase_enum(cls, v: Any) -> Any:
        """Accept enum names in any case."""
        return v.strip().lower() if isinstance(v, str) else v

    @field_validator("purities", mode="before")
    @classmethod
    def split_purities(cls, v: Any) -> Any:
        """Accept a comma-separated list."""
        if isinstance(v, str):
            return tuple(float(p) for p in v.split(",") if p.strip())
        return v

    @field_validator("purities")
    @classmethod
    def check_purities(cls, v: tuple[float, ...] | None) -> tuple[float, ...] | None:
        if v is not None and any(not 0.0 <= p <= 1.0 for p in v):
            raise ValueError("every purity must lie in [0, 1]")
        return v

    @property
    def params(self) -> EWLParams:
        return EWLParams(family=self.family, r=self.r, alpha=self.alpha, delta=self.delta)

    @property
    def evaluators(self) -> list[Evaluator]:
        if self.both_evaluators:
            return [Evaluator.RESTRICTED, Evaluator.HORODECKI]
        return [self.evaluator]

    @property
    def reservoir(self) -> ReservoirModel:
        return reservoir_from_mapping(
            {
                "model": self.model.value,
                "gamma0": self.gamma0,
                "lambda": self.lambda_,
                "w": self.w,
            }
        )

    @property
    def time_grid(self) -> TimeGrid:
        return TimeGrid(t0=self.t0, t1=self.t1, n=self.samples)


def _normalize_keys(values: dict[str, Any]) -> dict[str, Any]:
    """Lower-case keys with '-' mapped to '_'; None values dropped."""
    normalized = {}
    for key, value in values.items():
        if value is None:
            continue
        name = key.strip().lower().replace("-", "_")
        normalized["lambda" if name in ("lambda", "lambda_") else name] = value
    return normalized


def _file_values(path: Path) -> dict[str, Any]:
    if not path.exists():
        raise ConfigurationError(f"Config file not found: {path}", config_key="config")
    values = dotenv_values(path)
    logger.debug(f"Read {len(values)} keys from {path}")
    return dict(values)


def _yaml_defaults(config_dir: Path | None) -> dict[str, Any]:
    try:
        return load_config("defaults", config_dir=config_dir).as_run_defaults()
    except ConfigurationError as e:
        logger.warning(f"Using built-in defaults: {e}")
        return {}


def build_run_config(
    command: str,
    flags: dict[str, Any] | None = None,
    config_file: Path | None = None,
    config_dir: Path | None = None,
) -> RunConfig:
    """
    Merge defaults, config file and flags into a RunConfig.

    Args:
        command: Sub-command name
        flags: Explicit flag values (None means not given)
        config_file: Optional flat key=value file
        config_dir: Override of the YAML config directory

    Returns:
        Validated RunConfig

    Raises:
        ConfigurationError: Naming the first offending key
    """
    merged = _normalize_keys(_yaml_defaults(config_dir))
    if config_file is not None:
        merged.update(_normalize_keys(_file_values(config_file)))
    merged.update(_normalize_keys(flags or {}))
    merged["command"] = command

    try:
        return RunConfig.model_validate(merged)
    except ValidationError as e:
        error = e.errors()[0]
        key = str(error["loc"][0]) if error["loc"] else "config"
        raise ConfigurationError(f"Invalid value for '{key}': {error['msg']}", config_key=key) from e
