"""
Density-matrix validation and X-structure views.

Tolerances:
    Hermiticity  max |rho_ij - conj(rho_ji)| <= 1e-12
    Trace        |Tr rho - 1| <= 1e-12
    Positivity   smallest eigenvalue >= -1e-10
"""

import logging

import numpy as np

from chshtrap.core.constants import (
    HERMITIAN_TOL,
    OFF_X_ELEMENTS,
    PSD_TOL,
    TRACE_TOL,
    X_STRUCTURE_TOL,
)
from chshtrap.core.exceptions import InvalidStateError, NonXStateError
from chshtrap.core.types import (
    TWO_PI,
    ComplexMatrix,
    SingleQubitState,
    TwoQubitState,
    ValidationReport,
    XStateView,
)

logger = logging.getLogger(__name__)


def validate_matrix(matrix: ComplexMatrix) -> ValidationReport:
    """
    Hermiticity, trace and positivity diagnostics of a square matrix.

    Never raises; the report carries pass/fail per tolerance.
    """
    rho = np.asarray(matrix, dtype=np.complex128)
    hermiticity_residual = float(np.max(np.abs(rho - rho.conj().T)))
    trace_residual = float(abs(np.trace(rho) - 1.0))
    # Eigenvalues of the Hermitian part, so a slightly non-Hermitian
    # input still gets a meaningful positivity figure
    hermitian_part = (rho + rho.conj().T) / 2.0
    min_eigenvalue = float(np.min(np.linalg.eigvalsh(hermitian_part)))

    return ValidationReport(
        hermiticity_residual=hermiticity_residual,
        trace_residual=trace_residual,
        min_eigenvalue=min_eigenvalue,
        hermitian=hermiticity_residual <= HERMITIAN_TOL,
        unit_trace=trace_residual <= TRACE_TOL,
        positive=min_eigenvalue >= -PSD_TOL,
    )


def validate(state: TwoQubitState | SingleQubitState) -> ValidationReport:
    """
    Diagnostic report for a two- or single-qubit state.

    Args:
        state: State to check

    Returns:
        ValidationReport with residuals and pass/fail flags
    """
    report = validate_matrix(state.elements)
    if not report.passed:
        logger.debug(f"State failed validation: {report.failures()}")
    return report


def require_valid(state: TwoQubitState | SingleQubitState) -> None:
    """Raise InvalidStateError unless the state passes validate."""
    report = validate(state)
    if not report.passed:
        raise InvalidStateError(
            f"Not a valid density matrix: failed {', '.join(report.failures())}",
            report=report,
        )


def phase_of(z: complex) -> float:
    """Argument in [0, 2*pi); the phase of a zero element is 0."""
    if abs(z) == 0.0:
        return 0.0
    angle = float(np.angle(z)) % TWO_PI
    return 0.0 if angle >= TWO_PI else angle


def as_x_view(state: TwoQubitState) -> XStateView:
    """
    Extract the X-structure view of a state.

    Args:
        state: Two-qubit state

    Returns:
        XStateView with populations, coherence magnitudes and phases

    Raises:
        NonXStateError: If any element off the diagonal and anti-diagonal
            has magnitude above 1e-12
    """
    rho = state.elements
    for i, j in OFF_X_ELEMENTS:
        magnitude = float(abs(rho[i, j]))
        if magnitude > X_STRUCTURE_TOL:
            raise NonXStateError(
                f"State is not X-shaped: |rho_{i + 1}{j + 1}| = {magnitude:.3e}",
                element=(i, j),
                magnitude=magnitude,
            )

    populations = np.real(np.diag(rho))
    rho14 = complex(rho[0, 3])
    rho23 = complex(rho[1, 2])

    return XStateView(
        p11=float(populations[0]),
        p22=float(populations[1]),
        p33=float(populations[2]),
        p44=float(populations[3]),
        m14=abs(rho14),
        m23=abs(rho23),
        d14=phase_of(rho14),
        d23=phase_of(rho23),
    )


def is_x_state(state: TwoQubitState) -> bool:
    """Whether as_x_view would accept the state."""
    rho = state.elements
    return all(abs(rho[i, j]) <= X_STRUCTURE_TOL for i, j in OFF_X_ELEMENTS)


def x_view_is_physical(view: XStateView) -> bool:
    """Unit trace and the X-state positivity conditions m14^2 <= p11 p44, m23^2 <= p22 p33."""
    trace_ok = abs(view.p11 + view.p22 + view.p33 + view.p44 - 1.0) <= TRACE_TOL
    populations_ok = min(view.p11, view.p22, view.p33, view.p44) >= -PSD_TOL
    coherence_ok = (
        view.m14**2 <= view.p11 * view.p44 + PSD_TOL
        and view.m23**2 <= view.p22 * view.p33 + PSD_TOL
    )
    return trace_ok and populations_ok and coherence_ok
