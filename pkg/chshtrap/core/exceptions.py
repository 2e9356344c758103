"""
Custom exceptions for chsh-trap.

All exceptions inherit from ChshTrapError for easy catching.
"""

from typing import Any


class ChshTrapError(Exception):
    """Base exception for all chsh-trap errors."""

    pass


class DomainError(ChshTrapError, ValueError):
    """Raised when an input lies outside the domain of an operation."""

    def __init__(self, message: str, parameter: str | None = None, value: Any = None):
        self.parameter = parameter
        self.value = value
        super().__init__(message)


class InvalidStateError(ChshTrapError):
    """Raised when a matrix fails the density-matrix checks where a state is required."""

    def __init__(self, message: str, report: Any = None):
        self.report = report
        super().__init__(message)


class NonXStateError(ChshTrapError):
    """
    Raised when a state has non-zero elements off the diagonal and anti-diagonal.

    The offending element is reported with zero-based indices in the
    {|11>, |10>, |01>, |00>} basis.
    """

    def __init__(
        self,
        message: str,
        element: tuple[int, int] | None = None,
        magnitude: float | None = None,
    ):
        self.element = element
        self.magnitude = magnitude
        super().__init__(message)


class ConfigurationError(ChshTrapError):
    """Raised when configuration is invalid or missing."""

    def __init__(self, message: str, config_key: str | None = None):
        self.config_key = config_key
        super().__init__(message)


class OptimizationError(ChshTrapError):
    """Raised when the brute-force optimizer has no converged restart."""

    def __init__(self, message: str, diagnostics: dict[str, Any] | None = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


class ConsistencyError(ChshTrapError):
    """Raised when two evaluators that must agree do not."""

    def __init__(
        self,
        message: str,
        expected: float | None = None,
        actual: float | None = None,
    ):
        self.expected = expected
        self.actual = actual
        super().__init__(message)
