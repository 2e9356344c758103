"""
Bell evaluation engine.

Orchestrates the evaluation of one evolved state:
1. Evolve the time-zero X view through the amplitude-damping channel
2. Restricted closed-form maximum and its achieving settings
3. Horodecki maximum over all settings
4. Optional brute-force oracle
5. Check that the restricted settings achieve the restricted maximum
"""

import logging
import math

from chshtrap.chsh.horodecki import horodecki_max
from chshtrap.chsh.observables import bell_function
from chshtrap.chsh.optimizer import brute_force_max
from chshtrap.chsh.restricted import bell_parameters, restricted_settings
from chshtrap.core.constants import (
    DEFAULT_GRID_DENSITY,
    DEFAULT_RESTARTS,
    DEFAULT_SEED,
    RESTRICTED_CONSISTENCY_TOL,
)
from chshtrap.core.exceptions import ConsistencyError
from chshtrap.core.types import BellEvaluation, DecoherenceAmplitude, XStateView
from chshtrap.dynamics import AmplitudeLike, as_amplitude, propagate_x

logger = logging.getLogger(__name__)


class BellEngine:
    """
    Evaluates the Bell-function maxima of decayed X states.

    Output per state:
        - Restricted maximum (one A-observable pinned to z) and settings
        - Horodecki maximum over all settings
        - Brute-force maximum when the oracle is enabled
    """

    def __init__(
        self,
        brute_force: bool = True,
        restarts: int = DEFAULT_RESTARTS,
        grid_density: int = DEFAULT_GRID_DENSITY,
        seed: int = DEFAULT_SEED,
        workers: int = 1,
    ) -> None:
        """
        Initialize the engine.

        Args:
            brute_force: Run the brute-force oracle on every evaluation
            restarts: Random restarts of the oracle
            grid_density: Coarse-grid points per angle of the oracle
            seed: Seed of the oracle's random starts
            workers: Threads used by the oracle
        """
        self.brute_force = brute_force
        self.restarts = restarts
        self.grid_density = grid_density
        self.seed = seed
        self.workers = workers

    def evaluate(self, initial: XStateView, x: float) -> BellEvaluation:
        """
        Evaluate the state reached at population parameter x.

        Args:
            initial: Time-zero X view
            x: Population parameter in [0, 1]

        Returns:
            BellEvaluation of the evolved state
        """
        return self._evaluate(initial, DecoherenceAmplitude.from_population(x), x)

    def evaluate_amplitude(self, initial: XStateView, q: AmplitudeLike) -> BellEvaluation:
        """
        Evaluate the state reached with decoherence amplitude q on both qubits.

        Args:
            initial: Time-zero X view
            q: Decoherence amplitude shared by both qubits

        Returns:
            BellEvaluation of the evolved state

        Raises:
            ConsistencyError: If the restricted settings miss the restricted maximum
        """
        amplitude = as_amplitude(q)
        return self._evaluate(initial, amplitude, amplitude.population_parameter)

    def _evaluate(
        self,
        initial: XStateView,
        amplitude: DecoherenceAmplitude,
        x: float,
    ) -> BellEvaluation:
        p, q_param = bell_parameters(initial, x)
        restricted = 2.0 * math.sqrt(p * p + q_param * q_param)

        evolved_view = propagate_x(initial, amplitude, amplitude)
        evolved = evolved_view.to_state()
        # Evolved phases carry arg(q); for real q they equal the initial ones
        settings = restricted_settings(evolved_view, p, q_param)

        achieved = bell_function(evolved, settings)
        if abs(achieved - restricted) > RESTRICTED_CONSISTENCY_TOL:
            raise ConsistencyError(
                f"Bell function at restricted settings {achieved:.12g} "
                f"differs from restricted maximum {restricted:.12g} at x={x:.6g}",
                expected=restricted,
                actual=achieved,
            )

        horodecki = horodecki_max(evolved)

        oracle_value = None
        oracle = None
        if self.brute_force:
            result = brute_force_max(
                evolved,
                restarts=self.restarts,
                grid_density=self.grid_density,
                seed=self.seed,
                workers=self.workers,
            )
            oracle_value = result.value
            oracle = result.diagnostics

        logger.debug(
            f"x={x:.6g}: restricted={restricted:.12g} horodecki={horodecki:.12g} "
            f"brute_force={oracle_value}"
        )

        return BellEvaluation(
            x=x,
            restricted_max=restricted,
            horodecki_max=horodecki,
            brute_force_max=oracle_value,
            restricted_settings=settings,
            p=p,
            q=q_param,
            oracle=oracle,
        )


def evaluate(
    initial: XStateView,
    x: float,
    brute_force: bool = True,
    restarts: int = DEFAULT_RESTARTS,
    grid_density: int = DEFAULT_GRID_DENSITY,
    seed: int = DEFAULT_SEED,
) -> BellEvaluation:
    """
    Evaluate all Bell maxima of the state reached at population parameter x.

    Args:
        initial: Time-zero X view
        x: Population parameter in [0, 1]
        brute_force: Run the brute-force oracle
        restarts: Random restarts of the oracle
        grid_density: Coarse-grid points per angle of the oracle
        seed: Seed of the oracle's random starts

    Returns:
        BellEvaluation
    """
    engine = BellEngine(
        brute_force=brute_force,
        restarts=restarts,
        grid_density=grid_density,
        seed=seed,
    )
    return engine.evaluate(initial, x)
