"""
Closed-form restricted maximum of the Bell function for X states.

For an X state at time zero and population parameter x = |q|^2 (same
reservoir on both qubits):

    P = 1 - 2x [1 + rho11(0) - rho44(0) - 2 rho11(0) x]
    Q = 2x (|rho14(0)| + |rho23(0)|)
    B_max = 2 sqrt(P^2 + Q^2)

P is the zz correlation of the evolved state and Q the largest transverse
correlation. The maximum is attained with a = z and a' transverse, which
is why it is a maximum over the class of settings with one A-observable
pinned to the z axis. For Q^2 > P^2 the unrestricted (Horodecki) maximum
is larger.

Achieving settings, with shared azimuths phi_A for a, a' and phi_B for b, b':

    theta = (0, pi/2, theta2, pi - theta2),  theta2 = arctan(Q / |P|)
    phi_A = (k + k') pi + (d14 + d23) / 2
    phi_B = (k - k') pi + (d14 - d23) / 2

theta2 = pi/2 when P = 0. The branch integers k, k' change the settings,
not the value.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from chshtrap.core.exceptions import DomainError
from chshtrap.core.types import ChshSettings, MeasurementDirection, XStateView

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RestrictedMaximum:
    """Restricted Bell maximum with its P, Q parameters and achieving settings."""

    x: float
    restricted_max: float
    p: float
    q: float
    settings: ChshSettings


def _check_population(x: float) -> None:
    if not math.isfinite(x) or not 0.0 <= x <= 1.0:
        raise DomainError(f"Population parameter x={x} outside [0, 1]", parameter="x", value=x)


def bell_parameters(initial: XStateView, x: float) -> tuple[float, float]:
    """
    P and Q of the evolved state.

    Args:
        initial: Time-zero X view
        x: Population parameter |q|^2

    Returns:
        (P, Q)
    """
    _check_population(x)
    p = 1.0 - 2.0 * x * (1.0 + initial.p11 - initial.p44 - 2.0 * initial.p11 * x)
    q = 2.0 * x * (initial.m14 + initial.m23)
    return p, q


def restricted_curve(initial: XStateView, xs: NDArray[np.float64]) -> NDArray[np.float64]:
    """Vectorized 2 sqrt(P^2 + Q^2) over an array of population parameters."""
    xs = np.asarray(xs, dtype=np.float64)
    if np.any((xs < 0.0) | (xs > 1.0)):
        raise DomainError("Population parameters must lie in [0, 1]", parameter="x")
    p = 1.0 - 2.0 * xs * (1.0 + initial.p11 - initial.p44 - 2.0 * initial.p11 * xs)
    q = 2.0 * xs * (initial.m14 + initial.m23)
    return 2.0 * np.sqrt(p * p + q * q)


def restricted_settings(
    initial: XStateView,
    p: float,
    q: float,
    k: int = 0,
    k_prime: int = 0,
) -> ChshSettings:
    """
    Settings achieving the restricted maximum.

    Args:
        initial: X view whose phases d14, d23 set the azimuths
        p: P parameter
        q: Q parameter
        k: Branch integer
        k_prime: Branch integer

    Returns:
        ChshSettings with a = z, a' transverse
    """
    theta2 = math.pi / 2.0 if p == 0.0 else math.atan(q / abs(p))
    phi_a = (k + k_prime) * math.pi + (initial.d14 + initial.d23) / 2.0
    phi_b = (k - k_prime) * math.pi + (initial.d14 - initial.d23) / 2.0

    return ChshSettings(
        a=MeasurementDirection.normalized(0.0, phi_a),
        a_prime=MeasurementDirection.normalized(math.pi / 2.0, phi_a),
        b=MeasurementDirection.normalized(theta2, phi_b),
        b_prime=MeasurementDirection.normalized(math.pi - theta2, phi_b),
    )


def restricted_max(
    initial: XStateView,
    x: float,
    k: int = 0,
    k_prime: int = 0,
) -> RestrictedMaximum:
    """
    Restricted closed-form Bell maximum at population parameter x.

    Args:
        initial: Time-zero X view
        x: Population parameter in [0, 1]
        k: Branch integer of the achieving azimuths
        k_prime: Branch integer of the achieving azimuths

    Returns:
        RestrictedMaximum with value, P, Q and settings
    """
    p, q = bell_parameters(initial, x)
    value = 2.0 * math.sqrt(p * p + q * q)
    settings = restricted_settings(initial, p, q, k=k, k_prime=k_prime)
    logger.debug(f"Restricted max at x={x:.6g}: P={p:.6g} Q={q:.6g} B={value:.12g}")
    return RestrictedMaximum(x=x, restricted_max=value, p=p, q=q, settings=settings)
