"""
Independent zero-temperature amplitude damping of two qubits.

Single qubit, basis {|1>, |0>}:

    rho_11(t) = rho_11(0) |q|^2
    rho_10(t) = rho_10(0) q
    rho_01(t) = rho_01(0) q*
    rho_00(t) = rho_00(0) + rho_11(0) (1 - |q|^2)

The coefficient tensor A[i, i', l, l'] maps rho_{ll'}(0) to rho_{ii'}(t).
Two qubits evolving independently:

    rho_{ii',jj'}(t) = sum A_{ii'}^{ll'} B_{jj'}^{mm'} rho_{ll',mm'}(0)

No time variable appears here; time enters only through the reservoir module.
"""

import logging

import numpy as np
from numpy.typing import NDArray

from chshtrap.core.constants import EXCITED, GROUND
from chshtrap.core.types import (
    ComplexMatrix,
    DecoherenceAmplitude,
    SingleQubitState,
    TwoQubitState,
    XStateView,
)
from chshtrap.states import phase_of

logger = logging.getLogger(__name__)

AmplitudeLike = DecoherenceAmplitude | complex | float


def as_amplitude(q: AmplitudeLike) -> DecoherenceAmplitude:
    """Coerce a number into a validated DecoherenceAmplitude."""
    if isinstance(q, DecoherenceAmplitude):
        return q
    return DecoherenceAmplitude(complex(q))


def coefficient_tensor(q: AmplitudeLike) -> NDArray[np.complex128]:
    """
    Sparse single-qubit coefficient tensor A[i, i', l, l'].

    Non-zero entries: A_11^11 = |q|^2, A_10^10 = q, A_01^01 = q*,
    A_00^00 = 1, A_00^11 = 1 - |q|^2.
    """
    amp = as_amplitude(q)
    x = amp.population_parameter
    e, g = EXCITED, GROUND

    tensor = np.zeros((2, 2, 2, 2), dtype=np.complex128)
    tensor[e, e, e, e] = x
    tensor[e, g, e, g] = amp.value
    tensor[g, e, g, e] = np.conj(amp.value)
    tensor[g, g, g, g] = 1.0
    tensor[g, g, e, e] = 1.0 - x
    return tensor


def kraus_operators(q: AmplitudeLike) -> tuple[ComplexMatrix, ComplexMatrix]:
    """
    Kraus operators of the single-qubit map, basis {|1>, |0>}.

    K0 = q|1><1| + |0><0|,  K1 = sqrt(1 - |q|^2) |0><1|
    """
    amp = as_amplitude(q)
    k0 = np.array([[amp.value, 0.0], [0.0, 1.0]], dtype=np.complex128)
    k1 = np.array([[0.0, 0.0], [np.sqrt(1.0 - amp.population_parameter), 0.0]], dtype=np.complex128)
    return k0, k1


def single_qubit_map(rho0: SingleQubitState, q: AmplitudeLike) -> SingleQubitState:
    """
    Evolve a single-qubit state through the damping channel.

    Args:
        rho0: Initial state in the basis {|1>, |0>}
        q: Decoherence amplitude, |q| <= 1

    Returns:
        Evolved single-qubit state
    """
    tensor = coefficient_tensor(q)
    return SingleQubitState(np.einsum("iIlL,lL->iI", tensor, rho0.elements))


def excited_population(rho0: SingleQubitState, q: AmplitudeLike) -> float:
    """p(t) = rho_11(0) |q|^2, the excited-state population of one qubit."""
    return rho0.excited_population * as_amplitude(q).population_parameter


def propagate(
    rho0: TwoQubitState,
    q_a: AmplitudeLike,
    q_b: AmplitudeLike,
) -> TwoQubitState:
    """
    Evolve a two-qubit state with independent reservoirs.

    Literal contraction of the two coefficient tensors with the initial
    matrix reshaped as rho[l, m, l', m'] (qubit A index first).

    Args:
        rho0: Initial two-qubit state
        q_a: Decoherence amplitude of qubit A
        q_b: Decoherence amplitude of qubit B

    Returns:
        Evolved two-qubit state
    """
    tensor_a = coefficient_tensor(q_a)
    tensor_b = coefficient_tensor(q_b)
    rho = rho0.elements.reshape(2, 2, 2, 2)
    evolved = np.einsum("iIlL,jJmM,lmLM->ijIJ", tensor_a, tensor_b, rho)
    return TwoQubitState(evolved.reshape(4, 4))


def propagate_x(
    view0: XStateView,
    q_a: AmplitudeLike,
    q_b: AmplitudeLike,
) -> XStateView:
    """
    Closed-form evolution of an X-structured state.

    With xA = |qA|^2, xB = |qB|^2:
        p11 -> xA xB p11
        p22 -> xA p22 + xA (1 - xB) p11
        p33 -> xB p33 + (1 - xA) xB p11
        p44 -> 1 - (p11 + p22 + p33)
        m14 -> |qA||qB| m14, phase shifted by arg(qA qB)
        m23 -> |qA||qB| m23, phase shifted by arg(qA qB*)
    """
    amp_a, amp_b = as_amplitude(q_a), as_amplitude(q_b)
    xa, xb = amp_a.population_parameter, amp_b.population_parameter
    scale = amp_a.modulus * amp_b.modulus

    p11 = xa * xb * view0.p11
    p22 = xa * view0.p22 + xa * (1.0 - xb) * view0.p11
    p33 = xb * view0.p33 + (1.0 - xa) * xb * view0.p11
    p44 = 1.0 - (p11 + p22 + p33)

    rho14 = view0.rho14 * amp_a.value * amp_b.value
    rho23 = view0.rho23 * amp_a.value * np.conj(amp_b.value)

    return XStateView(
        p11=p11,
        p22=p22,
        p33=p33,
        p44=p44,
        m14=scale * view0.m14,
        m23=scale * view0.m23,
        d14=phase_of(rho14),
        d23=phase_of(rho23),
    )


def excited_populations(view: XStateView) -> tuple[float, float]:
    """Per-qubit excited populations (p_A, p_B) of an X state."""
    return view.p11 + view.p22, view.p11 + view.p33
