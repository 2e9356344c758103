"""
Brute-force maximization of the Bell function over measurement angles.

Used as an oracle for the closed-form evaluators. Two stages:

1. Coarse grid over the qubit-B directions (b, b'), grid_density points per
   angle. For fixed b, b' the qubit-A optimum is closed form:
       max_a |a . T(b - b')| = |T(b - b')|,   max_a' a' . T(b + b') = |T(b + b')|
   so every grid point carries a complete set of 8 angles.
2. Local quasi-Newton refinement (BFGS) over all free angles, started from the
   best grid points and from `restarts` seeded random starts.

Restarts may run on a thread pool. The reduction takes the maximum value and
breaks exact ties by the lexicographically smallest angle tuple, so the result
does not depend on scheduling.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from numpy.typing import NDArray
from scipy.optimize import minimize

from chshtrap.chsh.observables import (
    bell_function,
    bell_function_from_correlations,
    correlation_matrix,
    unit_vectors,
)
from chshtrap.core.constants import DEFAULT_GRID_DENSITY, DEFAULT_RESTARTS, DEFAULT_SEED
from chshtrap.core.exceptions import DomainError, OptimizationError
from chshtrap.core.types import ChshSettings, TwoQubitState

logger = logging.getLogger(__name__)

# Number of best grid points used as refinement seeds
GRID_SEEDS = 4

# BFGS status 2 means precision loss at a flat optimum; the kink of |.| in
# the objective triggers it routinely without affecting the value
_CONVERGED_STATUSES = (0, 2)

_PINNED_A = np.array([0.0, 0.0])


@dataclass(frozen=True)
class BruteForceResult:
    """Best Bell value found and the optimizer diagnostics."""

    value: float
    settings: ChshSettings
    starts: int
    converged: int
    best_start: int
    evaluations: int
    grid_best: float
    pinned: bool = False
    start_values: tuple[float, ...] = field(default=(), repr=False)

    @property
    def diagnostics(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "starts": self.starts,
            "converged": self.converged,
            "best_start": self.best_start,
            "evaluations": self.evaluations,
            "grid_best": self.grid_best,
            "pinned": self.pinned,
        }


@dataclass(frozen=True)
class _Candidate:
    value: float
    angles: tuple[float, ...]
    converged: bool
    evaluations: int


def _vector_angles(vector: NDArray[np.float64]) -> tuple[float, float]:
    """(theta, phi) of a vector's direction; z axis for a zero vector."""
    norm = float(np.linalg.norm(vector))
    if norm == 0.0:
        return 0.0, 0.0
    z = max(-1.0, min(1.0, float(vector[2]) / norm))
    return math.acos(z), math.atan2(float(vector[1]), float(vector[0]))


def _direction_grid(grid_density: int) -> NDArray[np.float64]:
    """(theta, phi) pairs of the coarse grid, shape (grid_density^2, 2)."""
    thetas = np.linspace(0.0, math.pi, grid_density)
    phis = np.linspace(0.0, 2.0 * math.pi, grid_density, endpoint=False)
    tt, pp = np.meshgrid(thetas, phis, indexing="ij")
    return np.stack([tt.ravel(), pp.ravel()], axis=-1)


def _grid_starts(
    t_matrix: NDArray[np.float64],
    grid_density: int,
    pinned: bool,
    count: int,
) -> tuple[list[NDArray[np.float64]], float]:
    """Full 8-angle starts from the best coarse-grid (b, b') pairs."""
    directions = _direction_grid(grid_density)
    t_b = unit_vectors(directions) @ t_matrix.T  # rows are T b
    diff = t_b[:, None, :] - t_b[None, :, :]
    total = t_b[:, None, :] + t_b[None, :, :]

    first = np.abs(diff[..., 2]) if pinned else np.linalg.norm(diff, axis=-1)
    values = (first + np.linalg.norm(total, axis=-1)).ravel()

    count = min(count, values.size)
    best = np.argpartition(-values, count - 1)[:count]
    best = best[np.argsort(-values[best], kind="stable")]

    starts = []
    n_dirs = directions.shape[0]
    for flat in best:
        i, j = divmod(int(flat), n_dirs)
        a = (0.0, 0.0) if pinned else _vector_angles(diff[i, j])
        a_prime = _vector_angles(total[i, j])
        starts.append(np.array([*a, *a_prime, *directions[i], *directions[j]]))
    return starts, float(values[best[0]])


def _random_starts(rng: np.random.Generator, count: int) -> list[NDArray[np.float64]]:
    starts = []
    for _ in range(count):
        thetas = rng.uniform(0.0, math.pi, size=4)
        phis = rng.uniform(0.0, 2.0 * math.pi, size=4)
        starts.append(np.column_stack([thetas, phis]).ravel())
    return starts


def _refine(
    t_matrix: NDArray[np.float64],
    start: NDArray[np.float64],
    pinned: bool,
) -> _Candidate:
    """Local BFGS maximization from one start."""
    if pinned:

        def objective(free: NDArray[np.float64]) -> float:
            return -bell_function_from_correlations(t_matrix, np.concatenate([_PINNED_A, free]))

        x0 = start[2:]
    else:

        def objective(free: NDArray[np.float64]) -> float:
            return -bell_function_from_correlations(t_matrix, free)

        x0 = start

    result = minimize(objective, x0, method="BFGS", options={"gtol": 1e-10, "maxiter": 2000})
    angles = np.concatenate([_PINNED_A, result.x]) if pinned else result.x
    settings = ChshSettings.from_angles(angles)
    return _Candidate(
        value=-float(result.fun),
        angles=settings.as_angles(),
        converged=bool(result.success) or result.status in _CONVERGED_STATUSES,
        evaluations=int(result.nfev),
    )


def brute_force_max(
    state: TwoQubitState,
    restarts: int = DEFAULT_RESTARTS,
    grid_density: int = DEFAULT_GRID_DENSITY,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
    pinned: bool = False,
) -> BruteForceResult:
    """
    Maximize the Bell function over all measurement angles.

    Args:
        state: Two-qubit state
        restarts: Random starts of the local refinement
        grid_density: Coarse-grid points per angle
        seed: Seed of the random starts
        workers: Threads used for the refinements (1 = sequential)
        pinned: Pin a to the z axis (restricted settings class)

    Returns:
        BruteForceResult with the best value, settings and diagnostics

    Raises:
        OptimizationError: If no refinement converged
    """
    if restarts < 0:
        raise DomainError(f"restarts={restarts} must be >= 0", parameter="restarts", value=restarts)
    if grid_density < 2:
        raise DomainError(
            f"grid_density={grid_density} must be >= 2",
            parameter="grid_density",
            value=grid_density,
        )

    t_matrix = correlation_matrix(state)
    grid, grid_best = _grid_starts(t_matrix, grid_density, pinned, GRID_SEEDS)
    starts = grid + _random_starts(np.random.default_rng(seed), restarts)

    def run(start: NDArray[np.float64]) -> _Candidate:
        return _refine(t_matrix, start, pinned)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            candidates = list(pool.map(run, starts))
    else:
        candidates = [run(start) for start in starts]

    converged = [c for c in candidates if c.converged]
    diagnostics = {
        "starts": len(candidates),
        "converged": len(converged),
        "grid_best": grid_best,
    }
    if not converged:
        raise OptimizationError("No brute-force refinement converged", diagnostics=diagnostics)
    if len(converged) < len(candidates):
        logger.warning(
            f"{len(candidates) - len(converged)} of {len(candidates)} refinements did not converge"
        )

    best = min(converged, key=lambda c: (-c.value, c.angles))
    settings = ChshSettings.from_angles(best.angles)
    value = bell_function(state, settings)

    logger.debug(
        f"Brute-force max {value:.12g} (grid {grid_best:.6g}, "
        f"{len(converged)}/{len(candidates)} converged)"
    )

    return BruteForceResult(
        value=value,
        settings=settings,
        starts=len(candidates),
        converged=len(converged),
        best_start=candidates.index(best),
        evaluations=sum(c.evaluations for c in candidates),
        grid_best=grid_best,
        pinned=pinned,
        start_values=tuple(c.value for c in candidates),
    )


def pinned_brute_force_max(
    state: TwoQubitState,
    restarts: int = DEFAULT_RESTARTS,
    grid_density: int = DEFAULT_GRID_DENSITY,
    seed: int = DEFAULT_SEED,
    workers: int = 1,
) -> BruteForceResult:
    """Brute-force maximum over settings with a pinned to the z axis."""
    return brute_force_max(
        state,
        restarts=restarts,
        grid_density=grid_density,
        seed=seed,
        workers=workers,
        pinned=True,
    )
