"""Independent amplitude-damping dynamics parametrized by q."""

from chshtrap.dynamics.channel import (
    AmplitudeLike,
    as_amplitude,
    coefficient_tensor,
    excited_population,
    excited_populations,
    kraus_operators,
    propagate,
    propagate_x,
    single_qubit_map,
)

__all__ = [
    "AmplitudeLike",
    "as_amplitude",
    "coefficient_tensor",
    "excited_population",
    "excited_populations",
    "kraus_operators",
    "propagate",
    "propagate_x",
    "single_qubit_map",
]
