"""
Bell-like and extended Werner-like (EWL) initial states.

Pure parts:
    Phi:  alpha|01> + beta e^{i delta}|10>
    Psi:  alpha|00> + beta e^{i delta}|11>

EWL mixture:
    rho = r |pure><pure| + (1 - r) I/4

Matrices are in the basis {|11>, |10>, |01>, |00>}. The EWL elements are
written directly from their closed forms so that the X structure is exact
rather than the result of cancellation.
"""

import logging
import math

import numpy as np

from chshtrap.core.constants import MAX_ENTANGLED_ALPHA
from chshtrap.core.exceptions import DomainError
from chshtrap.core.types import ComplexMatrix, EWLParams, StateFamily, TwoQubitState

logger = logging.getLogger(__name__)

# Basis indices
I11, I10, I01, I00 = 0, 1, 2, 3


def _check_alpha(alpha: float) -> None:
    if not math.isfinite(alpha) or abs(alpha) > 1.0:
        raise DomainError(f"alpha={alpha} outside [-1, 1]", parameter="alpha", value=alpha)


def _check_purity(r: float) -> None:
    if not math.isfinite(r) or not 0.0 <= r <= 1.0:
        raise DomainError(f"purity r={r} outside [0, 1]", parameter="r", value=r)


def _pure_amplitudes(params: EWLParams) -> tuple[int, int, complex, complex]:
    """
    Basis positions and amplitudes of the pure part.

    Returns:
        (index of the alpha term, index of the beta term, alpha, beta e^{i delta})
    """
    family = StateFamily.parse(params.family)
    beta_phase = params.beta * complex(math.cos(params.delta), math.sin(params.delta))
    if family is StateFamily.PHI:
        return I01, I10, complex(params.alpha), beta_phase
    return I00, I11, complex(params.alpha), beta_phase


def _pure_projector(params: EWLParams) -> ComplexMatrix:
    alpha_idx, beta_idx, alpha, beta = _pure_amplitudes(params)
    rho = np.zeros((4, 4), dtype=np.complex128)
    rho[alpha_idx, alpha_idx] = abs(alpha) ** 2
    rho[beta_idx, beta_idx] = abs(beta) ** 2
    rho[beta_idx, alpha_idx] = beta * np.conj(alpha)
    rho[alpha_idx, beta_idx] = alpha * np.conj(beta)
    return rho


def build_bell_like(params: EWLParams) -> TwoQubitState:
    """
    Build the pure Bell-like state |Phi> or |Psi> as a rank-1 density matrix.

    The purity field of params is ignored.

    Args:
        params: Family, alpha and delta of the pure state

    Returns:
        Density matrix of the pure state
    """
    _check_alpha(params.alpha)
    return TwoQubitState(_pure_projector(params))


def build_ewl(params: EWLParams) -> TwoQubitState:
    """
    Build an extended Werner-like state.

    Phi family: rho11 = rho44 = (1-r)/4, rho22 = (1-r)/4 + beta^2 r,
    rho33 = (1-r)/4 + alpha^2 r, rho23 = alpha beta e^{i delta} r.
    Psi family: rho22 = rho33 = (1-r)/4, rho11 = (1-r)/4 + beta^2 r,
    rho44 = (1-r)/4 + alpha^2 r, rho14 = alpha beta e^{i delta} r.

    Args:
        params: Family, purity r, alpha and delta

    Returns:
        X-structured density matrix
    """
    _check_purity(params.r)
    _check_alpha(params.alpha)

    family = StateFamily.parse(params.family)
    r = params.r
    alpha, beta = params.alpha, params.beta
    mixed = (1.0 - r) / 4.0
    coherence = alpha * beta * r * complex(math.cos(params.delta), math.sin(params.delta))

    rho = np.zeros((4, 4), dtype=np.complex128)
    if family is StateFamily.PHI:
        rho[I11, I11] = mixed
        rho[I10, I10] = mixed + beta**2 * r
        rho[I01, I01] = mixed + alpha**2 * r
        rho[I00, I00] = mixed
        rho[I10, I01] = coherence
        rho[I01, I10] = np.conj(coherence)
    else:
        rho[I11, I11] = mixed + beta**2 * r
        rho[I10, I10] = mixed
        rho[I01, I01] = mixed
        rho[I00, I00] = mixed + alpha**2 * r
        rho[I11, I00] = coherence
        rho[I00, I11] = np.conj(coherence)

    logger.debug(f"Built EWL state family={family.value} r={r} alpha={alpha} delta={params.delta}")
    return TwoQubitState(rho)


def build_werner(family: StateFamily | str, r: float, sign: int = 1) -> TwoQubitState:
    """
    Werner-like state: EWL state whose pure part is a Bell state.

    alpha = beta = 1/sqrt(2); sign = -1 selects the minus Bell state through
    delta = pi.
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}", parameter="sign", value=sign)
    delta = 0.0 if sign == 1 else math.pi
    return build_ewl(
        EWLParams(
            family=StateFamily.parse(family),
            r=r,
            alpha=MAX_ENTANGLED_ALPHA,
            delta=delta,
        )
    )


def maximally_mixed() -> TwoQubitState:
    """I/4."""
    return TwoQubitState(np.eye(4, dtype=np.complex128) / 4.0)


def product_state(rho_a: ComplexMatrix, rho_b: ComplexMatrix) -> TwoQubitState:
    """Tensor product rho_A (x) rho_B in the {|1>, |0>} single-qubit order."""
    return TwoQubitState(np.kron(np.asarray(rho_a), np.asarray(rho_b)))


def partial_trace(state: TwoQubitState, keep: str = "A") -> ComplexMatrix:
    """
    Reduced single-qubit density matrix.

    Args:
        state: Two-qubit state
        keep: "A" to trace out qubit B, "B" to trace out qubit A

    Returns:
        2x2 matrix in the basis {|1>, |0>}
    """
    rho = state.elements.reshape(2, 2, 2, 2)
    if keep.upper() == "A":
        return np.einsum("ajbj->ab", rho)
    if keep.upper() == "B":
        return np.einsum("iaib->ab", rho)
    raise DomainError(f"keep must be 'A' or 'B', got {keep!r}", parameter="keep", value=keep)


def random_x_state(rng: np.random.Generator) -> TwoQubitState:
    """
    Random physical X state.

    Populations are Dirichlet(1, 1, 1, 1); each coherence magnitude is a
    uniform fraction of its positivity bound sqrt(rho_ii rho_jj), with a
    uniform phase.

    Args:
        rng: Seeded numpy generator

    Returns:
        X-structured density matrix
    """
    p = rng.dirichlet(np.ones(4))
    rho = np.diag(p).astype(np.complex128)
    for i, j in ((I11, I00), (I10, I01)):
        magnitude = rng.uniform() * math.sqrt(p[i] * p[j])
        coherence = magnitude * np.exp(1j * rng.uniform(0.0, 2.0 * math.pi))
        rho[i, j] = coherence
        rho[j, i] = np.conj(coherence)
    return TwoQubitState(rho)
