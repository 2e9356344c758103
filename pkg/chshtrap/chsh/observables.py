"""
Spin-like observables, correlation functions and the CHSH-Bell function.

Observable along (theta, phi), basis {|1>, |0>}:

    O = cos(theta) (|1><1| - |0><0|) + sin(theta) (e^{i phi}|1><0| + e^{-i phi}|0><1|)
      = n . (sigma_1, sigma_2, sigma_3),  n = (sin cos, sin sin, cos)

Bell function:

    B = |<a b> - <a b'>| + <a' b> + <a' b'>

Classical bound 2, quantum (Tsirelson) bound 2*sqrt(2).
"""

import logging
import math

import numpy as np
from numpy.typing import NDArray

from chshtrap.core.constants import CORRELATION_IMAG_TOL
from chshtrap.core.exceptions import InvalidStateError
from chshtrap.core.types import (
    ChshSettings,
    ComplexMatrix,
    MeasurementDirection,
    TwoQubitState,
    is_violation,
)

logger = logging.getLogger(__name__)

# Pauli matrices in the {|1>, |0>} basis, matching the observable above:
# sigma_1 = O(pi/2, 0), sigma_2 = O(pi/2, pi/2), sigma_3 = O(0, .)
SIGMA_1: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_2: ComplexMatrix = np.array([[0, 1j], [-1j, 0]], dtype=np.complex128)
SIGMA_3: ComplexMatrix = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def pauli_matrices() -> tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix]:
    """(sigma_1, sigma_2, sigma_3) in the {|1>, |0>} basis."""
    return SIGMA_1, SIGMA_2, SIGMA_3


def observable_matrix(direction: MeasurementDirection) -> ComplexMatrix:
    """
    2x2 Hermitian observable with eigenvalues +1 and -1.

    Args:
        direction: Polar and azimuthal angles

    Returns:
        Observable matrix in the {|1>, |0>} basis
    """
    c = math.cos(direction.theta)
    s = math.sin(direction.theta)
    e = complex(math.cos(direction.phi), math.sin(direction.phi))
    return np.array([[c, s * e], [s * e.conjugate(), -c]], dtype=np.complex128)


def correlation(
    state: TwoQubitState,
    dir_a: MeasurementDirection,
    dir_b: MeasurementDirection,
) -> float:
    """
    Correlation function <O_A O_B> = Tr[rho (O_A (x) O_B)].

    Raises:
        InvalidStateError: If the trace has an imaginary part above 1e-10
            (the state is not Hermitian)
    """
    joint = np.kron(observable_matrix(dir_a), observable_matrix(dir_b))
    value = complex(np.trace(state.elements @ joint))
    if abs(value.imag) > CORRELATION_IMAG_TOL:
        raise InvalidStateError(
            f"Correlation has imaginary residual {value.imag:.3e}; state is not Hermitian"
        )
    return float(value.real)


def bell_function(state: TwoQubitState, settings: ChshSettings) -> float:
    """
    CHSH-Bell function |<ab> - <ab'>| + <a'b> + <a'b'>.

    Args:
        state: Two-qubit state
        settings: Directions a, a' (qubit A) and b, b' (qubit B)

    Returns:
        Bell function value
    """
    ab = correlation(state, settings.a, settings.b)
    ab_prime = correlation(state, settings.a, settings.b_prime)
    a_prime_b = correlation(state, settings.a_prime, settings.b)
    a_prime_b_prime = correlation(state, settings.a_prime, settings.b_prime)
    return abs(ab - ab_prime) + a_prime_b + a_prime_b_prime


def correlation_matrix(state: TwoQubitState) -> NDArray[np.float64]:
    """
    Pauli correlation matrix T_nm = Tr[rho (sigma_n (x) sigma_m)], n, m in {1, 2, 3}.

    <O_A O_B> = a . T b for unit vectors a, b.
    """
    paulis = pauli_matrices()
    t_matrix = np.empty((3, 3), dtype=np.float64)
    for n, sigma_n in enumerate(paulis):
        for m, sigma_m in enumerate(paulis):
            t_matrix[n, m] = float(np.real(np.trace(state.elements @ np.kron(sigma_n, sigma_m))))
    return t_matrix


def unit_vectors(angles: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Unit vectors for an array of (theta, phi) pairs.

    Args:
        angles: Array of shape (..., 2)

    Returns:
        Array of shape (..., 3)
    """
    theta, phi = angles[..., 0], angles[..., 1]
    st = np.sin(theta)
    return np.stack([st * np.cos(phi), st * np.sin(phi), np.cos(theta)], axis=-1)


def bell_function_from_correlations(
    t_matrix: NDArray[np.float64],
    angles: NDArray[np.float64],
) -> float:
    """
    Bell function from the correlation matrix and 8 angles.

    Same value as bell_function, without building 4x4 matrices; used as
    the optimizer objective.
    """
    a, a_prime, b, b_prime = unit_vectors(np.asarray(angles, dtype=np.float64).reshape(4, 2))
    t_b = t_matrix @ b
    t_b_prime = t_matrix @ b_prime
    return float(abs(a @ t_b - a @ t_b_prime) + a_prime @ t_b + a_prime @ t_b_prime)


def violates(value: float) -> bool:
    """True when a Bell-function value exceeds the classical bound 2."""
    return bool(is_violation(value))
