"""Reservoir models producing q(t) trajectories."""

from chshtrap.reservoir.models import (
    LorentzianReservoir,
    MarkovianReservoir,
    ReservoirKind,
    ReservoirModel,
    TimeGrid,
    TrajectorySample,
    TrappingReservoir,
    asymptotic_population_parameter,
    q_of_t,
    reservoir_from_mapping,
    trajectory,
)

__all__ = [
    "LorentzianReservoir",
    "MarkovianReservoir",
    "ReservoirKind",
    "ReservoirModel",
    "TimeGrid",
    "TrajectorySample",
    "TrappingReservoir",
    "asymptotic_population_parameter",
    "q_of_t",
    "reservoir_from_mapping",
    "trajectory",
]
