"""Core types, constants, configuration, and exceptions for chsh-trap."""

from chshtrap.core.config import (
    DefaultsConfig,
    Settings,
    get_settings,
    load_config,
)
from chshtrap.core.constants import (
    CLASSICAL_BOUND,
    TSIRELSON_BOUND,
)
from chshtrap.core.exceptions import (
    ChshTrapError,
    ConfigurationError,
    ConsistencyError,
    DomainError,
    InvalidStateError,
    NonXStateError,
    OptimizationError,
)
from chshtrap.core.types import (
    BellEvaluation,
    ChshSettings,
    DecoherenceAmplitude,
    Evaluator,
    EWLParams,
    MeasurementDirection,
    SingleQubitState,
    StateFamily,
    SweepRecord,
    ThresholdResult,
    TimeSample,
    TwoQubitState,
    ValidationReport,
    XStateView,
)

__all__ = [
    # Types
    "BellEvaluation",
    "ChshSettings",
    "DecoherenceAmplitude",
    "Evaluator",
    "EWLParams",
    "MeasurementDirection",
    "SingleQubitState",
    "StateFamily",
    "SweepRecord",
    "ThresholdResult",
    "TimeSample",
    "TwoQubitState",
    "ValidationReport",
    "XStateView",
    # Constants
    "CLASSICAL_BOUND",
    "TSIRELSON_BOUND",
    # Config
    "DefaultsConfig",
    "Settings",
    "get_settings",
    "load_config",
    # Exceptions
    "ChshTrapError",
    "ConfigurationError",
    "ConsistencyError",
    "DomainError",
    "InvalidStateError",
    "NonXStateError",
    "OptimizationError",
]
