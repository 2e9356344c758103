"""
Reservoir-driven time series and the protection time of the violation.
"""

import logging

import pandas as pd
from scipy.optimize import brentq

from chshtrap.analysis.sweep import evaluator_function, initial_view, ordered_map
from chshtrap.analysis.threshold import threshold_population
from chshtrap.chsh import BellEngine
from chshtrap.core.constants import CLASSICAL_BOUND, PROTECTION_TIME_TOL
from chshtrap.core.types import EWLParams, Evaluator, TimeSample, is_violation
from chshtrap.dynamics import excited_populations, propagate_x
from chshtrap.reservoir import (
    ReservoirModel,
    TimeGrid,
    TrajectorySample,
    asymptotic_population_parameter,
    q_of_t,
    trajectory,
)

logger = logging.getLogger(__name__)

TIME_SERIES_COLUMNS = [
    "t",
    "x",
    "restricted_max",
    "horodecki_max",
    "violation_restricted",
    "violation_horodecki",
    "p_excited",
    "p_excited_b",
]

# Samples per scan window of the protection-time search
PROTECTION_SCAN_POINTS = 401
# Doublings of the scan horizon before giving up
PROTECTION_MAX_DOUBLINGS = 8


def time_series(
    params: EWLParams,
    model: ReservoirModel,
    grid: TimeGrid,
    workers: int = 1,
    engine: BellEngine | None = None,
) -> list[TimeSample]:
    """
    Bell maxima along a reservoir trajectory.

    Both qubits see the same reservoir. The brute-force oracle is skipped
    unless an engine with it enabled is passed.

    Args:
        params: EWL state parameters
        model: Reservoir model
        grid: Sample times
        workers: Threads for the per-sample evaluations
        engine: Evaluation engine (restricted and Horodecki only by default)

    Returns:
        One TimeSample per grid time
    """
    engine = engine or BellEngine(brute_force=False)
    initial = initial_view(params)

    def evaluate(sample: TrajectorySample) -> TimeSample:
        evaluation = engine.evaluate_amplitude(initial, sample.q)
        p_a, p_b = excited_populations(propagate_x(initial, sample.q, sample.q))
        return TimeSample(
            t=sample.t,
            q=sample.q.value,
            x=sample.x,
            evaluation=evaluation,
            p_excited_a=p_a,
            p_excited_b=p_b,
        )

    samples = ordered_map(evaluate, trajectory(model, grid), workers)
    violating = sum(1 for s in samples if s.evaluation.violation_restricted)
    logger.info(
        f"Time series under {model.describe()}: {len(samples)} samples, "
        f"{violating} with restricted violation"
    )
    return samples


def samples_to_frame(samples: list[TimeSample]) -> pd.DataFrame:
    """Time samples in the CSV column layout."""
    return pd.DataFrame([s.to_dict() for s in samples], columns=TIME_SERIES_COLUMNS)


def default_horizon(model: ReservoirModel) -> float:
    """Scan horizon of 50 decay times."""
    return 50.0 / model.gamma0


def protection_time(
    params: EWLParams,
    model: ReservoirModel,
    evaluator: Evaluator | str = Evaluator.RESTRICTED,
    t_max: float | None = None,
) -> float | None:
    """
    First time at which the Bell violation is lost.

    Args:
        params: EWL state parameters
        model: Reservoir model
        evaluator: Restricted or Horodecki maximum
        t_max: Initial scan horizon (default 50 / gamma0)

    Returns:
        Time of loss; 0.0 when the initial state does not violate; None when
        the reservoir traps x(t) inside the violation region for all t
    """
    evaluator = Evaluator.parse(evaluator)
    bell = evaluator_function(initial_view(params), evaluator)

    def bell_at(t: float) -> float:
        return bell(q_of_t(model, t).population_parameter)

    if not is_violation(bell_at(0.0)):
        return 0.0

    threshold = threshold_population(params, evaluator)
    x_inf = asymptotic_population_parameter(model)
    trapped = threshold.x_star is not None and x_inf > threshold.x_star

    horizon = t_max if t_max is not None else default_horizon(model)
    t_prev = 0.0
    for _ in range(PROTECTION_MAX_DOUBLINGS + 1):
        step = (horizon - t_prev) / (PROTECTION_SCAN_POINTS - 1)
        for i in range(1, PROTECTION_SCAN_POINTS):
            t = t_prev + i * step
            if not is_violation(bell_at(t)):
                t_loss = t
                if bell_at(t) < CLASSICAL_BOUND:
                    t_loss = brentq(
                        lambda s: bell_at(s) - CLASSICAL_BOUND,
                        t - step,
                        t,
                        xtol=PROTECTION_TIME_TOL,
                    )
                logger.info(f"Violation lost at t={t_loss:.10g} under {model.describe()}")
                return float(t_loss)
        if trapped:
            logger.info(
                f"Violation protected for all t: x_inf={x_inf:.6g} > x*={threshold.x_star:.6g}"
            )
            return None
        t_prev, horizon = horizon, 2.0 * horizon

    logger.warning(f"Violation not lost up to t={t_prev:g} under {model.describe()}")
    return None
