"""
Violation thresholds in the population parameter and the critical purity.

B(x) need not be monotone on [0, 1] (the Psi family's P changes sign), so
the threshold search starts at x = 1 and walks down the grid. The reported
x* is the lower edge of the violation window reached first from x = 1.
"""

import logging
import math
from collections.abc import Callable

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from chshtrap.analysis.sweep import evaluator_function, initial_view, population_grid
from chshtrap.core.constants import (
    CLASSICAL_BOUND,
    DEFAULT_SWEEP_POINTS,
    PURITY_TOL,
    THRESHOLD_XTOL,
    VIOLATION_SLACK,
)
from chshtrap.core.types import EWLParams, Evaluator, StateFamily, ThresholdResult, is_violation

logger = logging.getLogger(__name__)


def _threshold_of(
    bell: Callable[[float], float],
    points: int,
) -> float | None:
    """Lower edge of the highest-x violation window of bell(x), or None."""
    xs = population_grid(points)
    values = np.array([bell(float(x)) for x in xs])
    violating = values > CLASSICAL_BOUND + VIOLATION_SLACK

    top = None
    for i in range(len(xs) - 1, -1, -1):
        if violating[i]:
            top = i
            break
    if top is None:
        return None

    low = top
    while low > 0 and violating[low - 1]:
        low -= 1
    if low == 0:
        # B(0) = 2 for every state, so this only happens on a coarse grid
        return float(xs[0])

    lo, hi = float(xs[low - 1]), float(xs[low])
    f_lo = values[low - 1] - CLASSICAL_BOUND
    if f_lo >= 0.0:
        return lo
    return float(brentq(lambda x: bell(x) - CLASSICAL_BOUND, lo, hi, xtol=THRESHOLD_XTOL))


def threshold_population(
    params: EWLParams,
    evaluator: Evaluator | str = Evaluator.RESTRICTED,
    points: int = DEFAULT_SWEEP_POINTS,
) -> ThresholdResult:
    """
    Population parameter above which the evaluator exceeds 2.

    Args:
        params: EWL state parameters
        evaluator: Restricted or Horodecki maximum
        points: Grid points of the initial scan

    Returns:
        ThresholdResult; exists is False when the maximum over [0, 1] stays <= 2
    """
    evaluator = Evaluator.parse(evaluator)
    bell = evaluator_function(initial_view(params), evaluator)
    x_star = _threshold_of(bell, points)

    if x_star is None:
        logger.info(f"No {evaluator.value} violation for r={params.r:g} alpha={params.alpha:g}")
        return ThresholdResult(exists=False, x_star=None, evaluator=evaluator)

    logger.info(
        f"{evaluator.value} threshold x*={x_star:.12g} for r={params.r:g} alpha={params.alpha:g}"
    )
    return ThresholdResult(exists=True, x_star=x_star, evaluator=evaluator)


def max_over_population(
    bell: Callable[[float], float],
    points: int = DEFAULT_SWEEP_POINTS,
) -> float:
    """
    Maximum of bell(x) over [0, 1].

    Grid scan, then bounded scalar refinement around the best grid point,
    with the x = 1 endpoint always included.
    """
    xs = population_grid(points)
    values = np.array([bell(float(x)) for x in xs])
    best = int(np.argmax(values))

    lo = float(xs[max(0, best - 1)])
    hi = float(xs[min(len(xs) - 1, best + 1)])
    refined = minimize_scalar(
        lambda x: -bell(x),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": THRESHOLD_XTOL},
    )
    candidates = [float(values[best]), bell(1.0)]
    if refined.success:
        candidates.append(-float(refined.fun))
    return max(candidates)


def critical_purity(
    family: StateFamily | str,
    alpha: float,
    evaluator: Evaluator | str = Evaluator.RESTRICTED,
    delta: float = 0.0,
    points: int = DEFAULT_SWEEP_POINTS,
) -> float | None:
    """
    Smallest purity r at which some x in [0, 1] gives a violation.

    Args:
        family: State family
        alpha: Bell-like amplitude
        evaluator: Restricted or Horodecki maximum
        delta: Bell-like phase
        points: Grid points of the inner maximization

    Returns:
        Critical purity, or None when even r = 1 never violates
    """
    evaluator = Evaluator.parse(evaluator)
    base = EWLParams(family=StateFamily.parse(family), r=1.0, alpha=alpha, delta=delta)

    def violates_somewhere(r: float) -> bool:
        bell = evaluator_function(initial_view(base.with_purity(r)), evaluator)
        return bool(is_violation(max_over_population(bell, points)))

    if not violates_somewhere(1.0):
        logger.info(f"No violation for any purity (alpha={alpha:g}, {evaluator.value})")
        return None

    lo, hi = 0.0, 1.0
    steps = math.ceil(math.log2(1.0 / PURITY_TOL))
    for _ in range(steps):
        mid = 0.5 * (lo + hi)
        if violates_somewhere(mid):
            hi = mid
        else:
            lo = mid

    r_crit = 0.5 * (lo + hi)
    logger.info(f"Critical purity {r_crit:.12g} (alpha={alpha:g}, {evaluator.value})")
    return r_crit
