"""
Sweeps of the Bell maxima over the population parameter x = |q|^2.

The restricted maximum is evaluated in closed form on the whole grid at
once; the Horodecki maximum needs one evolved state per point and runs
through an ordered parallel map.
"""

import logging
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

import numpy as np
import pandas as pd
from numpy.typing import NDArray

from chshtrap.chsh import horodecki_max, restricted_curve
from chshtrap.core.constants import DEFAULT_SWEEP_POINTS, FIGURE_PURITIES
from chshtrap.core.exceptions import DomainError
from chshtrap.core.types import (
    DecoherenceAmplitude,
    EWLParams,
    Evaluator,
    StateFamily,
    SweepRecord,
    XStateView,
)
from chshtrap.dynamics import excited_populations, propagate_x
from chshtrap.states import as_x_view, build_ewl

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

SWEEP_COLUMNS = [
    "x",
    "restricted_max",
    "horodecki_max",
    "violation_restricted",
    "violation_horodecki",
    "p_excited",
]


def ordered_map(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """Map preserving input order; a thread pool is used when workers > 1."""
    if workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(func, items))
    return [func(item) for item in items]


def population_grid(points: int = DEFAULT_SWEEP_POINTS) -> NDArray[np.float64]:
    """n uniform points on [0, 1]."""
    if points < 2:
        raise DomainError(f"points={points} must be >= 2", parameter="points", value=points)
    return np.linspace(0.0, 1.0, points)


def initial_view(params: EWLParams) -> XStateView:
    """Time-zero X view of an EWL state."""
    return as_x_view(build_ewl(params))


def evolved_view(initial: XStateView, x: float) -> XStateView:
    """X view reached at population parameter x with real q = sqrt(x) on both qubits."""
    q = DecoherenceAmplitude.from_population(x)
    return propagate_x(initial, q, q)


def horodecki_at(initial: XStateView, x: float) -> float:
    """Horodecki maximum of the state reached at population parameter x."""
    return horodecki_max(evolved_view(initial, x).to_state())


def evaluator_function(initial: XStateView, evaluator: Evaluator) -> Callable[[float], float]:
    """Bell maximum as a scalar function of x for one evaluator."""
    if evaluator is Evaluator.RESTRICTED:
        return lambda x: float(restricted_curve(initial, np.array([x]))[0])
    return lambda x: horodecki_at(initial, x)


def sweep(
    params: EWLParams,
    points: int = DEFAULT_SWEEP_POINTS,
    evaluators: Iterable[Evaluator | str] = (Evaluator.RESTRICTED, Evaluator.HORODECKI),
    workers: int = 1,
) -> list[SweepRecord]:
    """
    Bell maxima on a uniform grid of population parameters.

    Args:
        params: EWL state parameters
        points: Number of grid points on [0, 1]
        evaluators: Evaluators to run; the others are reported as None
        workers: Threads for the Horodecki evaluations

    Returns:
        One SweepRecord per grid point, in increasing x
    """
    selected = {Evaluator.parse(e) for e in evaluators}
    initial = initial_view(params)
    xs = population_grid(points)

    restricted: list[float | None] = [None] * len(xs)
    if Evaluator.RESTRICTED in selected:
        restricted = [float(v) for v in restricted_curve(initial, xs)]

    horodecki: list[float | None] = [None] * len(xs)
    if Evaluator.HORODECKI in selected:
        horodecki = list(ordered_map(lambda x: horodecki_at(initial, x), list(xs), workers))

    records = []
    for i, x in enumerate(xs):
        p_excited, _ = excited_populations(evolved_view(initial, float(x)))
        records.append(
            SweepRecord(
                x=float(x),
                restricted_max=restricted[i],
                horodecki_max=horodecki[i],
                p_excited=p_excited,
            )
        )

    family = StateFamily.parse(params.family).value
    logger.info(
        f"Sweep {family} r={params.r:g} alpha={params.alpha:g}: "
        f"{len(records)} points, evaluators={sorted(e.value for e in selected)}"
    )
    return records


def records_to_frame(records: Sequence[SweepRecord]) -> pd.DataFrame:
    """Sweep records in the CSV column layout."""
    return pd.DataFrame([r.to_dict() for r in records], columns=SWEEP_COLUMNS)


def violation_intervals(
    records: Sequence[SweepRecord],
    evaluator: Evaluator | str = Evaluator.RESTRICTED,
) -> list[tuple[float, float]]:
    """
    Grid intervals where the evaluator exceeds 2.

    Each interval runs from the first to the last violating grid point of a
    contiguous run.

    Args:
        records: Sweep records in increasing x
        evaluator: Evaluator whose violation flag is used

    Returns:
        List of (x_lo, x_hi)
    """
    evaluator = Evaluator.parse(evaluator)
    intervals: list[tuple[float, float]] = []
    start: float | None = None
    previous: float | None = None

    for record in records:
        flag = (
            record.violation_restricted
            if evaluator is Evaluator.RESTRICTED
            else record.violation_horodecki
        )
        if flag is None:
            raise DomainError(
                f"Records carry no {evaluator.value} values", parameter="evaluator"
            )
        if flag and start is None:
            start = record.x
        elif not flag and start is not None and previous is not None:
            intervals.append((start, previous))
            start = None
        previous = record.x

    if start is not None and previous is not None:
        intervals.append((start, previous))
    return intervals


def figure_curves(
    family: StateFamily | str,
    alpha: float,
    purities: Sequence[float] = FIGURE_PURITIES,
    points: int = DEFAULT_SWEEP_POINTS,
    evaluator: Evaluator | str = Evaluator.RESTRICTED,
    delta: float = 0.0,
    workers: int = 1,
    evaluators: Sequence[Evaluator | str] | None = None,
) -> pd.DataFrame:
    """
    Bell-maximum curves for several purities in one table.

    With several evaluators each purity gets one column per evaluator,
    named "r=<purity>:<evaluator>".

    Args:
        family: State family
        alpha: Bell-like amplitude
        purities: Purities r, one column each
        points: Grid points on [0, 1]
        evaluator: Evaluator of the curves
        delta: Bell-like phase
        workers: Threads for the Horodecki evaluations
        evaluators: Several evaluators; overrides evaluator when given

    Returns:
        DataFrame with column "x" and the purity columns
    """
    chosen = [Evaluator.parse(e) for e in (evaluators or [evaluator])]
    base = EWLParams(family=StateFamily.parse(family), r=1.0, alpha=alpha, delta=delta)

    frame = pd.DataFrame({"x": population_grid(points)})
    for r in purities:
        records = sweep(base.with_purity(r), points=points, evaluators=chosen, workers=workers)
        for current in chosen:
            column = f"r={r:g}" if len(chosen) == 1 else f"r={r:g}:{current.value}"
            frame[column] = [record.value(current) for record in records]
    return frame
