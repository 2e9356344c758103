"""
Phenomenological reservoir models producing the decoherence amplitude q(t).

Models (all with q(0) = 1 and |q(t)| <= 1):

    Markovian:   q = exp(-gamma0 t / 2)
    Lorentzian:  q = e^{-lambda t/2} [cosh(d t/2) + (lambda/d) sinh(d t/2)],
                 d = sqrt(lambda^2 - 2 gamma0 lambda)   (resonant pseudomode)
    Trapping:    q = w + (1 - w) exp(-gamma0 t / 2)     (q -> w as t -> inf)

The Lorentzian form oscillates (complex d) for lambda < 2 gamma0. It is
evaluated as

    q = 1/2 [(1 + lambda/d) e^{(d - lambda) t/2} + (1 - lambda/d) e^{-(d + lambda) t/2}]

which never overflows, with the d -> 0 limit e^{-lambda t/2} (1 + lambda t/2).
"""

import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, TypeAlias

import numpy as np

from chshtrap.core.constants import LORENTZIAN_IMAG_TOL
from chshtrap.core.exceptions import ConfigurationError, DomainError
from chshtrap.core.types import DecoherenceAmplitude

logger = logging.getLogger(__name__)

# Below this |d| the Lorentzian is evaluated through its critical-damping limit
CRITICAL_D_EPS = 1e-9


class ReservoirKind(str, Enum):
    """Reservoir model tags used by the CLI and config files."""

    MARKOVIAN = "markovian"
    LORENTZIAN = "lorentzian"
    TRAPPING = "trapping"


def _check_rate(name: str, value: float) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise DomainError(f"{name}={value} must be a positive rate", parameter=name, value=value)


@dataclass(frozen=True)
class MarkovianReservoir:
    """Memoryless flat-spectrum reservoir."""

    gamma0: float

    def __post_init__(self) -> None:
        _check_rate("gamma0", self.gamma0)

    @property
    def kind(self) -> ReservoirKind:
        return ReservoirKind.MARKOVIAN

    def describe(self) -> str:
        return f"Markovian (gamma0={self.gamma0:g})"


@dataclass(frozen=True)
class LorentzianReservoir:
    """Resonant Lorentzian spectral density of width spectral_width."""

    gamma0: float
    spectral_width: float

    def __post_init__(self) -> None:
        _check_rate("gamma0", self.gamma0)
        _check_rate("lambda", self.spectral_width)

    @property
    def kind(self) -> ReservoirKind:
        return ReservoirKind.LORENTZIAN

    @property
    def oscillating(self) -> bool:
        """Revivals of x(t) occur in the strong-coupling regime lambda < 2 gamma0."""
        return self.spectral_width < 2.0 * self.gamma0

    def describe(self) -> str:
        regime = "strong coupling" if self.oscillating else "weak coupling"
        return f"Lorentzian (gamma0={self.gamma0:g}, lambda={self.spectral_width:g}, {regime})"


@dataclass(frozen=True)
class TrappingReservoir:
    """
    Toy population-trapping reservoir.

    Convex combination of the constant w and a Markovian decay, so the
    population parameter never falls below w^2.
    """

    gamma0: float
    w: float

    def __post_init__(self) -> None:
        _check_rate("gamma0", self.gamma0)
        if not math.isfinite(self.w) or not 0.0 <= self.w <= 1.0:
            raise DomainError(f"w={self.w} outside [0, 1]", parameter="w", value=self.w)

    @property
    def kind(self) -> ReservoirKind:
        return ReservoirKind.TRAPPING

    def describe(self) -> str:
        return f"Trapping (gamma0={self.gamma0:g}, w={self.w:g}, x_inf={self.w**2:g})"


ReservoirModel: TypeAlias = MarkovianReservoir | LorentzianReservoir | TrappingReservoir


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid of n sample times on [t0, t1]."""

    t0: float
    t1: float
    n: int

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t0) and math.isfinite(self.t1)):
            raise DomainError("Time grid bounds must be finite", parameter="grid")
        if self.t0 < 0.0:
            raise DomainError(f"t0={self.t0} must be >= 0", parameter="t0", value=self.t0)
        if self.t1 <= self.t0:
            raise DomainError(
                f"t1={self.t1} must exceed t0={self.t0}", parameter="t1", value=self.t1
            )
        if self.n < 2:
            raise DomainError(f"n={self.n} must be >= 2", parameter="n", value=self.n)

    @property
    def times(self) -> np.ndarray:
        return np.linspace(self.t0, self.t1, self.n)


@dataclass(frozen=True)
class TrajectorySample:
    """q(t) and the population parameter x = |q(t)|^2 at one time."""

    t: float
    q: DecoherenceAmplitude

    @property
    def x(self) -> float:
        return self.q.population_parameter


def _lorentzian_q(model: LorentzianReservoir, t: float) -> complex:
    lam, gamma0 = model.spectral_width, model.gamma0
    d = cmath.sqrt(complex(lam * lam - 2.0 * gamma0 * lam))

    if abs(d) < CRITICAL_D_EPS:
        return complex(math.exp(-lam * t / 2.0) * (1.0 + lam * t / 2.0))

    ratio = lam / d
    value = 0.5 * (
        (1.0 + ratio) * cmath.exp((d - lam) * t / 2.0)
        + (1.0 - ratio) * cmath.exp(-(d + lam) * t / 2.0)
    )
    if abs(value.imag) > LORENTZIAN_IMAG_TOL:
        logger.warning(f"Lorentzian q(t={t}) has imaginary residual {value.imag:.3e}")
    return complex(value.real)


def q_of_t(model: ReservoirModel, t: float) -> DecoherenceAmplitude:
    """
    Decoherence amplitude of a reservoir model at time t.

    Args:
        model: Reservoir model
        t: Time (same units as 1/gamma0), t >= 0

    Returns:
        DecoherenceAmplitude with q(0) = 1
    """
    if not math.isfinite(t) or t < 0.0:
        raise DomainError(f"t={t} must be a finite non-negative time", parameter="t", value=t)

    match model:
        case MarkovianReservoir(gamma0=gamma0):
            value = complex(math.exp(-gamma0 * t / 2.0))
        case LorentzianReservoir():
            value = _lorentzian_q(model, t)
        case TrappingReservoir(gamma0=gamma0, w=w):
            value = complex(w + (1.0 - w) * math.exp(-gamma0 * t / 2.0))
        case _:
            raise DomainError(f"Unsupported reservoir model {model!r}", parameter="model")

    # Rounding can push |q| a hair above 1 at t = 0
    if abs(value) > 1.0:
        value = value / abs(value)
    return DecoherenceAmplitude(value)


def trajectory(model: ReservoirModel, grid: TimeGrid) -> list[TrajectorySample]:
    """
    Sample q(t) on a uniform time grid.

    Args:
        model: Reservoir model
        grid: Time grid

    Returns:
        One TrajectorySample per grid time
    """
    samples = [TrajectorySample(t=float(t), q=q_of_t(model, float(t))) for t in grid.times]
    logger.debug(
        f"Trajectory for {model.describe()}: {len(samples)} samples, "
        f"x(t1)={samples[-1].x:.6g}"
    )
    return samples


def asymptotic_population_parameter(model: ReservoirModel) -> float:
    """
    Long-time limit of |q(t)|^2.

    0 for Markovian and Lorentzian reservoirs, w^2 for the trapping model.
    """
    match model:
        case TrappingReservoir(w=w):
            return w * w
        case MarkovianReservoir() | LorentzianReservoir():
            return 0.0
        case _:
            raise DomainError(f"Unsupported reservoir model {model!r}", parameter="model")


def reservoir_from_mapping(data: dict[str, Any]) -> ReservoirModel:
    """
    Build a reservoir model from config keys.

    Keys: model (markovian|lorentzian|trapping), gamma0, lambda, w.
    """
    raw_kind = str(data.get("model", "markovian")).strip().lower()
    try:
        kind = ReservoirKind(raw_kind)
    except ValueError:
        raise ConfigurationError(
            f"Unknown reservoir model '{raw_kind}'. "
            f"Valid: {', '.join(k.value for k in ReservoirKind)}",
            config_key="model",
        ) from None

    gamma0 = float(data.get("gamma0", 1.0))
    if kind is ReservoirKind.MARKOVIAN:
        return MarkovianReservoir(gamma0=gamma0)
    if kind is ReservoirKind.LORENTZIAN:
        width = data.get("lambda", data.get("lambda_"))
        if width is None:
            raise ConfigurationError("Lorentzian model requires 'lambda'", config_key="lambda")
        return LorentzianReservoir(gamma0=gamma0, spectral_width=float(width))
    if "w" not in data:
        raise ConfigurationError("Trapping model requires 'w'", config_key="w")
    return TrappingReservoir(gamma0=gamma0, w=float(data["w"]))
