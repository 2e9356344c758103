"""CHSH-Bell function, closed-form maxima, and the brute-force oracle."""

from chshtrap.chsh.engine import BellEngine, evaluate
from chshtrap.chsh.horodecki import horodecki_max
from chshtrap.chsh.observables import (
    bell_function,
    bell_function_from_correlations,
    correlation,
    correlation_matrix,
    observable_matrix,
    pauli_matrices,
    unit_vectors,
    violates,
)
from chshtrap.chsh.optimizer import BruteForceResult, brute_force_max, pinned_brute_force_max
from chshtrap.chsh.restricted import (
    RestrictedMaximum,
    bell_parameters,
    restricted_curve,
    restricted_max,
    restricted_settings,
)

__all__ = [
    "BellEngine",
    "BruteForceResult",
    "RestrictedMaximum",
    "bell_function",
    "bell_function_from_correlations",
    "bell_parameters",
    "brute_force_max",
    "correlation",
    "correlation_matrix",
    "evaluate",
    "horodecki_max",
    "observable_matrix",
    "pauli_matrices",
    "pinned_brute_force_max",
    "restricted_curve",
    "restricted_max",
    "restricted_settings",
    "unit_vectors",
    "violates",
]
