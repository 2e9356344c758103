"""
Pytest configuration and fixtures for chsh-trap tests.
"""

import math

import numpy as np
import pytest

from chshtrap.core.constants import MAX_ENTANGLED_ALPHA
from chshtrap.core.types import (
    ChshSettings,
    EWLParams,
    MeasurementDirection,
    StateFamily,
    TwoQubitState,
)
from chshtrap.states import build_ewl, build_werner


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for randomized checks."""
    return np.random.default_rng(20240115)


@pytest.fixture
def bell_state() -> TwoQubitState:
    """(|00> + |11>)/sqrt(2)."""
    return build_werner(StateFamily.PSI, 1.0)


@pytest.fixture
def tsirelson_settings() -> ChshSettings:
    """Settings reaching 2 sqrt(2) on (|00> + |11>)/sqrt(2): a = z, a' = x, b, b' at +-45 degrees."""
    return ChshSettings(
        a=MeasurementDirection(0.0, 0.0),
        a_prime=MeasurementDirection(math.pi / 2, 0.0),
        b=MeasurementDirection(math.pi / 4, 0.0),
        b_prime=MeasurementDirection(3 * math.pi / 4, 0.0),
    )


@pytest.fixture
def maximally_mixed_state() -> TwoQubitState:
    """I/4."""
    return TwoQubitState(np.eye(4, dtype=np.complex128) / 4.0)


@pytest.fixture
def phi_params() -> EWLParams:
    """Phi family, r = 1, alpha = beta = 1/sqrt(2)."""
    return EWLParams(family=StateFamily.PHI, r=1.0, alpha=MAX_ENTANGLED_ALPHA)


@pytest.fixture
def psi_params() -> EWLParams:
    """Psi family, r = 1, alpha = beta = 1/sqrt(2)."""
    return EWLParams(family=StateFamily.PSI, r=1.0, alpha=MAX_ENTANGLED_ALPHA)


@pytest.fixture
def phi_state(phi_params: EWLParams) -> TwoQubitState:
    return build_ewl(phi_params)


@pytest.fixture
def psi_threshold() -> float:
    """Real root of 4x^3 - 8x^2 + 9x - 4, the Psi-family threshold at r = 1."""
    roots = np.roots([4.0, -8.0, 9.0, -4.0])
    real = [float(r.real) for r in roots if abs(r.imag) < 1e-12]
    assert len(real) == 1
    return real[0]


@pytest.fixture
def general_states() -> list[TwoQubitState]:
    """Seeded full-rank states with non-zero coherences everywhere (complex Ginibre)."""
    rng = np.random.default_rng(31)
    states = []
    for _ in range(100):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        states.append(TwoQubitState(rho / np.trace(rho).real))
    return states
