"""
Configuration management for chsh-trap.

Loads settings from environment variables and the YAML defaults file.
Uses Pydantic for validation.
"""

from functools import lru_cache
from pathlib import Path
from typing import Any

import yaml
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from chshtrap.core.constants import (
    DEFAULT_GRID_DENSITY,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    DEFAULT_SWEEP_POINTS,
)
from chshtrap.core.exceptions import ConfigurationError

PACKAGE_CONFIG_DIR = Path(__file__).resolve().parents[2] / "config"


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.

    Config directory and log level come from a .env file or CHSHTRAP_* variables.
    """

    model_config = SettingsConfigDict(
        env_prefix="CHSHTRAP_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    config_dir: Path = Field(
        default=PACKAGE_CONFIG_DIR,
        description="Directory containing YAML config files",
    )
    log_level: str = Field(
        default="INFO",
        description="Logging level",
    )

    @field_validator("config_dir", mode="before")
    @classmethod
    def resolve_path(cls, v: str | Path) -> Path:
        """Convert string to Path and resolve."""
        return Path(v).resolve()

    @field_validator("log_level", mode="before")
    @classmethod
    def uppercase_log_level(cls, v: str) -> str:
        """Ensure log level is uppercase."""
        return v.upper()


class DefaultsConfig:
    """Numerical defaults loaded from defaults.yaml."""

    def __init__(self, config_path: Path):
        self._config = self._load_yaml(config_path)

    @staticmethod
    def _load_yaml(path: Path) -> dict[str, Any]:
        """Load and parse YAML file."""
        if not path.exists():
            raise ConfigurationError(f"Config file not found: {path}")

        with open(path) as f:
            try:
                return yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(f"Invalid YAML in {path}: {e}") from e

    @property
    def sweep_points(self) -> int:
        """Number of uniform x points in a sweep."""
        return int(self._config.get("sweep", {}).get("points", DEFAULT_SWEEP_POINTS))

    @property
    def grid_density(self) -> int:
        """Coarse-grid points per angle of the brute-force optimizer."""
        return int(
            self._config.get("brute_force", {}).get("grid_density", DEFAULT_GRID_DENSITY)
        )

    @property
    def restarts(self) -> int:
        """Random restarts of the brute-force local refinement."""
        return int(self._config.get("brute_force", {}).get("restarts", DEFAULT_RESTARTS))

    @property
    def seed(self) -> int:
        """Seed of the brute-force restarts."""
        return int(self._config.get("brute_force", {}).get("seed", DEFAULT_SEED))

    @property
    def reservoir(self) -> dict[str, Any]:
        """Default reservoir model keys (model, gamma0, lambda, w)."""
        return dict(self._config.get("reservoir", {"model": "markovian", "gamma0": 1.0}))

    @property
    def time_grid(self) -> dict[str, Any]:
        """Default time grid in units of 1/gamma0."""
        return dict(self._config.get("time_grid", {"t0": 0.0, "t1": 10.0, "n": 101}))

    def as_run_defaults(self) -> dict[str, Any]:
        """Flat key/value defaults understood by RunConfig."""
        reservoir = self.reservoir
        grid = self.time_grid
        return {
            "points": self.sweep_points,
            "grid_density": self.grid_density,
            "restarts": self.restarts,
            "seed": self.seed,
            "model": reservoir.get("model", "markovian"),
            "gamma0": reservoir.get("gamma0", 1.0),
            "lambda_": reservoir.get("lambda", 0.1),
            "w": reservoir.get("w", 0.95),
            "t0": grid.get("t0", 0.0),
            "t1": grid.get("t1", 10.0),
            "samples": grid.get("n", 101),
        }


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Get cached application settings."""
    return Settings()


def load_config(config_type: str, config_dir: Path | None = None) -> DefaultsConfig:
    """
    Load a specific configuration file.

    Args:
        config_type: Currently only "defaults"
        config_dir: Override of Settings.config_dir

    Returns:
        Appropriate config object
    """
    directory = config_dir or get_settings().config_dir
    config_map: dict[str, tuple[Path, type[DefaultsConfig]]] = {
        "defaults": (directory / "defaults.yaml", DefaultsConfig),
    }

    if config_type not in config_map:
        raise ConfigurationError(
            f"Unknown config type: {config_type}. "
            f"Valid types: {list(config_map.keys())}",
            config_key=config_type,
        )

    path, config_class = config_map[config_type]
    return config_class(path)
