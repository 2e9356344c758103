"""Sweeps, thresholds, critical purity and time series of the Bell maxima."""

from chshtrap.analysis.sweep import (
    SWEEP_COLUMNS,
    evolved_view,
    figure_curves,
    horodecki_at,
    initial_view,
    ordered_map,
    population_grid,
    records_to_frame,
    sweep,
    violation_intervals,
)
from chshtrap.analysis.threshold import (
    critical_purity,
    max_over_population,
    threshold_population,
)
from chshtrap.analysis.timeseries import (
    TIME_SERIES_COLUMNS,
    protection_time,
    samples_to_frame,
    time_series,
)

__all__ = [
    "SWEEP_COLUMNS",
    "TIME_SERIES_COLUMNS",
    "critical_purity",
    "evolved_view",
    "figure_curves",
    "horodecki_at",
    "initial_view",
    "max_over_population",
    "ordered_map",
    "population_grid",
    "protection_time",
    "records_to_frame",
    "samples_to_frame",
    "sweep",
    "threshold_population",
    "time_series",
    "violation_intervals",
]
