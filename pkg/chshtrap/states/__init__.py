"""Two-qubit initial states, validation, and X-structure views."""

from chshtrap.states.builders import (
    build_bell_like,
    build_ewl,
    build_werner,
    maximally_mixed,
    partial_trace,
    product_state,
    random_x_state,
)
from chshtrap.states.validation import (
    as_x_view,
    is_x_state,
    phase_of,
    require_valid,
    validate,
    validate_matrix,
    x_view_is_physical,
)

__all__ = [
    "as_x_view",
    "build_bell_like",
    "build_ewl",
    "build_werner",
    "is_x_state",
    "maximally_mixed",
    "partial_trace",
    "phase_of",
    "product_state",
    "random_x_state",
    "require_valid",
    "validate",
    "validate_matrix",
    "x_view_is_physical",
]
