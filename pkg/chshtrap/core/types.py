"""
Core type definitions for chsh-trap.

Defines enums, value dataclasses, and type aliases shared by the states,
dynamics, chsh and analysis modules. All value types are immutable after
construction; matrices are stored as read-only numpy arrays.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, TypeAlias

import numpy as np
from numpy.typing import NDArray

from chshtrap.core.constants import (
    BASIS_LABEL,
    CLASSICAL_BOUND,
    VIOLATION_SLACK,
)
from chshtrap.core.exceptions import DomainError

ComplexValue: TypeAlias = complex
ComplexMatrix: TypeAlias = NDArray[np.complex128]
Angles: TypeAlias = tuple[float, float, float, float, float, float, float, float]

TWO_PI = 2.0 * math.pi


def _frozen_matrix(values: Any, shape: tuple[int, int], name: str) -> ComplexMatrix:
    """Copy values into a read-only complex array of the given shape."""
    matrix = np.array(values, dtype=np.complex128)
    if matrix.shape != shape:
        raise DomainError(
            f"{name} must have shape {shape}, got {matrix.shape}",
            parameter=name,
            value=matrix.shape,
        )
    if not np.all(np.isfinite(matrix)):
        raise DomainError(f"{name} has non-finite elements", parameter=name)
    matrix.setflags(write=False)
    return matrix


def is_violation(value: float | None) -> bool | None:
    """Whether a Bell-function value violates the CHSH inequality (B > 2)."""
    if value is None:
        return None
    return value > CLASSICAL_BOUND + VIOLATION_SLACK


class StateFamily(str, Enum):
    """
    Extended Werner-like state families.

    PHI: pure part alpha|01> + beta e^{i delta}|10>
    PSI: pure part alpha|00> + beta e^{i delta}|11>
    """

    PHI = "phi"
    PSI = "psi"

    @classmethod
    def parse(cls, value: "str | StateFamily") -> "StateFamily":
        """Parse a family name case-insensitively."""
        if isinstance(value, StateFamily):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise DomainError(
                f"Unknown state family '{value}'. Valid: phi, psi",
                parameter="family",
                value=value,
            ) from None


class Evaluator(str, Enum):
    """Closed-form Bell maximum evaluators usable for thresholds and sweeps."""

    RESTRICTED = "restricted"  # maximum with one A-observable pinned to z
    HORODECKI = "horodecki"  # maximum over all settings

    @classmethod
    def parse(cls, value: "str | Evaluator") -> "Evaluator":
        """Parse an evaluator name case-insensitively."""
        if isinstance(value, Evaluator):
            return value
        try:
            return cls(value.strip().lower())
        except ValueError:
            raise DomainError(
                f"Unknown evaluator '{value}'. Valid: restricted, horodecki",
                parameter="evaluator",
                value=value,
            ) from None


# =============================================================================
# STATES
# =============================================================================


@dataclass(frozen=True, eq=False)
class TwoQubitState:
    """
    Two-qubit density matrix in the basis {|11>, |10>, |01>, |00>}.

    Construction only checks shape and finiteness; use
    chshtrap.states.validate for the density-matrix checks.
    """

    elements: ComplexMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", _frozen_matrix(self.elements, (4, 4), "elements"))

    def __getitem__(self, index: tuple[int, int]) -> complex:
        return complex(self.elements[index])

    @property
    def populations(self) -> tuple[float, float, float, float]:
        """Diagonal elements (p11, p22, p33, p44)."""
        d = np.real(np.diag(self.elements))
        return (float(d[0]), float(d[1]), float(d[2]), float(d[3]))

    def allclose(self, other: "TwoQubitState", atol: float = 1e-12) -> bool:
        """Elementwise comparison within an absolute tolerance."""
        return bool(np.allclose(self.elements, other.elements, rtol=0.0, atol=atol))

    def to_dict(self) -> dict[str, Any]:
        """Serialize as row-major [re, im] pairs."""
        return {
            "basis": BASIS_LABEL,
            "elements": [[float(z.real), float(z.imag)] for z in self.elements.ravel()],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "TwoQubitState":
        """Inverse of to_dict."""
        basis = data.get("basis", BASIS_LABEL)
        if basis != BASIS_LABEL:
            raise DomainError(
                f"Unsupported basis '{basis}', expected '{BASIS_LABEL}'",
                parameter="basis",
                value=basis,
            )
        pairs = data["elements"]
        if len(pairs) != 16:
            raise DomainError("Expected 16 [re, im] pairs", parameter="elements", value=len(pairs))
        values = [complex(re, im) for re, im in pairs]
        return cls(np.array(values, dtype=np.complex128).reshape(4, 4))


@dataclass(frozen=True, eq=False)
class SingleQubitState:
    """Single-qubit density matrix in the basis {|1>, |0>}."""

    elements: ComplexMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", _frozen_matrix(self.elements, (2, 2), "elements"))

    @property
    def excited_population(self) -> float:
        """rho_11, the population of |1>."""
        return float(self.elements[0, 0].real)

    def allclose(self, other: "SingleQubitState", atol: float = 1e-12) -> bool:
        """Elementwise comparison within an absolute tolerance."""
        return bool(np.allclose(self.elements, other.elements, rtol=0.0, atol=atol))


@dataclass(frozen=True)
class XStateView:
    """
    The eight real degrees of freedom of an X-structured two-qubit state.

    Populations p11..p44 follow the basis order, m14/m23 are the magnitudes
    of rho_14 and rho_23, and d14/d23 their phases in [0, 2*pi).
    """

    p11: float
    p22: float
    p33: float
    p44: float
    m14: float
    m23: float
    d14: float
    d23: float

    @property
    def rho14(self) -> complex:
        return complex(self.m14 * np.exp(1j * self.d14))

    @property
    def rho23(self) -> complex:
        return complex(self.m23 * np.exp(1j * self.d23))

    def to_state(self) -> TwoQubitState:
        """Embed the view back into a 4x4 matrix."""
        rho = np.zeros((4, 4), dtype=np.complex128)
        rho[0, 0], rho[1, 1], rho[2, 2], rho[3, 3] = self.p11, self.p22, self.p33, self.p44
        rho[0, 3] = self.rho14
        rho[3, 0] = np.conj(self.rho14)
        rho[1, 2] = self.rho23
        rho[2, 1] = np.conj(self.rho23)
        return TwoQubitState(rho)

    def to_dict(self) -> dict[str, float]:
        return {
            "p11": self.p11,
            "p22": self.p22,
            "p33": self.p33,
            "p44": self.p44,
            "m14": self.m14,
            "m23": self.m23,
            "d14": self.d14,
            "d23": self.d23,
        }

    @classmethod
    def from_dict(cls, data: dict[str, float]) -> "XStateView":
        return cls(**{key: float(data[key]) for key in cls.__dataclass_fields__})


@dataclass(frozen=True)
class EWLParams:
    """
    Parameters of an extended Werner-like state.

    beta is derived as the non-negative root sqrt(1 - alpha^2); a negative
    beta is expressed through delta = pi.
    """

    family: StateFamily
    r: float
    alpha: float
    delta: float = 0.0

    @property
    def beta(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.alpha**2))

    def with_purity(self, r: float) -> "EWLParams":
        return EWLParams(family=self.family, r=r, alpha=self.alpha, delta=self.delta)

    def to_dict(self) -> dict[str, Any]:
        return {
            "family": self.family.value,
            "r": self.r,
            "alpha": self.alpha,
            "beta": self.beta,
            "delta": self.delta,
        }


@dataclass(frozen=True)
class ValidationReport:
    """Density-matrix diagnostics with pass/fail per tolerance."""

    hermiticity_residual: float
    trace_residual: float
    min_eigenvalue: float
    hermitian: bool
    unit_trace: bool
    positive: bool

    @property
    def passed(self) -> bool:
        return self.hermitian and self.unit_trace and self.positive

    def failures(self) -> list[str]:
        """Names of the failed checks."""
        checks = {
            "hermitian": self.hermitian,
            "unit_trace": self.unit_trace,
            "positive": self.positive,
        }
        return [name for name, ok in checks.items() if not ok]

    def to_dict(self) -> dict[str, Any]:
        return {
            "hermiticity_residual": self.hermiticity_residual,
            "trace_residual": self.trace_residual,
            "min_eigenvalue": self.min_eigenvalue,
            "hermitian": self.hermitian,
            "unit_trace": self.unit_trace,
            "positive": self.positive,
            "passed": self.passed,
        }


# =============================================================================
# DYNAMICS
# =============================================================================


@dataclass(frozen=True)
class DecoherenceAmplitude:
    """
    Complex decoherence amplitude q of the zero-temperature damping channel.

    The channel is contractive only for |q| <= 1.
    """

    value: complex

    def __post_init__(self) -> None:
        q = complex(self.value)
        if not (math.isfinite(q.real) and math.isfinite(q.imag)):
            raise DomainError("q must be finite", parameter="q", value=q)
        if abs(q) > 1.0 + 1e-15:
            raise DomainError(f"|q| = {abs(q)} exceeds 1", parameter="q", value=q)
        object.__setattr__(self, "value", q)

    @property
    def population_parameter(self) -> float:
        """x = |q|^2."""
        return min(1.0, abs(self.value) ** 2)

    @property
    def modulus(self) -> float:
        return min(1.0, abs(self.value))

    @property
    def phase(self) -> float:
        return float(np.angle(self.value)) if self.value != 0 else 0.0

    @classmethod
    def from_population(cls, x: float) -> "DecoherenceAmplitude":
        """Real non-negative amplitude with |q|^2 = x."""
        if not 0.0 <= x <= 1.0:
            raise DomainError(
                f"Population parameter x={x} outside [0, 1]", parameter="x", value=x
            )
        return cls(complex(math.sqrt(x), 0.0))


# =============================================================================
# MEASUREMENTS
# =============================================================================


@dataclass(frozen=True)
class MeasurementDirection:
    """Spin-like observable direction: polar theta in [0, pi], azimuth phi in [0, 2*pi)."""

    theta: float
    phi: float = 0.0

    def __post_init__(self) -> None:
        if not 0.0 <= self.theta <= math.pi:
            raise DomainError(
                f"theta={self.theta} outside [0, pi]", parameter="theta", value=self.theta
            )
        if not 0.0 <= self.phi < TWO_PI:
            raise DomainError(
                f"phi={self.phi} outside [0, 2*pi)", parameter="phi", value=self.phi
            )

    @classmethod
    def normalized(cls, theta: float, phi: float) -> "MeasurementDirection":
        """Map arbitrary angles onto the canonical ranges (same unit vector)."""
        theta = math.fmod(theta, TWO_PI)
        if theta < 0.0:
            theta += TWO_PI
        if theta > math.pi:
            theta = TWO_PI - theta
            phi += math.pi
        phi = math.fmod(phi, TWO_PI)
        if phi < 0.0:
            phi += TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        return cls(theta=min(theta, math.pi), phi=phi)

    @property
    def unit_vector(self) -> NDArray[np.float64]:
        st = math.sin(self.theta)
        return np.array(
            [st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)]
        )


@dataclass(frozen=True)
class ChshSettings:
    """Measurement settings: a, a' on qubit A and b, b' on qubit B."""

    a: MeasurementDirection
    a_prime: MeasurementDirection
    b: MeasurementDirection
    b_prime: MeasurementDirection

    def as_angles(self) -> Angles:
        """(theta, phi) of a, a', b, b' flattened."""
        return (
            self.a.theta, self.a.phi,
            self.a_prime.theta, self.a_prime.phi,
            self.b.theta, self.b.phi,
            self.b_prime.theta, self.b_prime.phi,
        )  # fmt: skip

    @classmethod
    def from_angles(cls, angles: Any) -> "ChshSettings":
        """Build settings from 8 arbitrary angles, normalizing ranges."""
        values = [float(v) for v in angles]
        if len(values) != 8:
            raise DomainError("Expected 8 angles", parameter="angles", value=len(values))
        directions = [
            MeasurementDirection.normalized(values[i], values[i + 1]) for i in range(0, 8, 2)
        ]
        return cls(*directions)

    def to_dict(self) -> dict[str, dict[str, float]]:
        return {
            name: {"theta": d.theta, "phi": d.phi}
            for name, d in (
                ("a", self.a),
                ("a_prime", self.a_prime),
                ("b", self.b),
                ("b_prime", self.b_prime),
            )
        }


@dataclass(frozen=True)
class BellEvaluation:
    """
    Bell-function maxima of one evolved state.

    restricted_max is the closed-form maximum with one A-observable pinned
    to the z axis; horodecki_max is the maximum over all settings. The two
    are reported side by side and never substituted for one another.
    oracle holds the brute-force diagnostics when the oracle ran.
    """

    x: float
    restricted_max: float
    horodecki_max: float
    brute_force_max: float | None
    restricted_settings: ChshSettings
    p: float
    q: float
    oracle: dict[str, Any] | None = field(default=None, compare=False, repr=False)

    @property
    def violation_restricted(self) -> bool:
        return bool(is_violation(self.restricted_max))

    @property
    def violation_horodecki(self) -> bool:
        return bool(is_violation(self.horodecki_max))

    @property
    def discrepancy(self) -> float:
        """Horodecki minus restricted maximum (zero when P^2 >= Q^2 on EWL inputs)."""
        return self.horodecki_max - self.restricted_max

    def to_dict(self) -> dict[str, Any]:
        return {
            "x": self.x,
            "restricted_max": self.restricted_max,
            "horodecki_max": self.horodecki_max,
            "brute_force_max": self.brute_force_max,
            "restricted_settings": self.restricted_settings.to_dict(),
            "P": self.p,
            "Q": self.q,
            "violation_restricted": self.violation_restricted,
            "violation_horodecki": self.violation_horodecki,
        }


# =============================================================================
# ANALYSIS
# =============================================================================


@dataclass(frozen=True)
class SweepRecord:
    """One point of a Bell-maximum sweep over the population parameter."""

    x: float
    restricted_max: float | None
    horodecki_max: float | None
    p_excited: float

    @property
    def violation_restricted(self) -> bool | None:
        return is_violation(self.restricted_max)

    @property
    def violation_horodecki(self) -> bool | None:
        return is_violation(self.horodecki_max)

    def value(self, evaluator: Evaluator) -> float | None:
        if evaluator is Evaluator.RESTRICTED:
            return self.restricted_max
        return self.horodecki_max

    def to_dict(self) -> dict[str, Any]:
        return {
            "x": self.x,
            "restricted_max": self.restricted_max,
            "horodecki_max": self.horodecki_max,
            "violation_restricted": self.violation_restricted,
            "violation_horodecki": self.violation_horodecki,
            "p_excited": self.p_excited,
        }


@dataclass(frozen=True)
class ThresholdResult:
    """Population-parameter threshold above which the evaluator exceeds 2."""

    exists: bool
    x_star: float | None
    evaluator: Evaluator

    def to_dict(self) -> dict[str, Any]:
        return {
            "exists": self.exists,
            "x_star": self.x_star,
            "evaluator": self.evaluator.value,
        }


@dataclass(frozen=True)
class TimeSample:
    """One sample of a reservoir-driven time series."""

    t: float
    q: complex
    x: float
    evaluation: BellEvaluation
    p_excited_a: float
    p_excited_b: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "t": self.t,
            "x": self.x,
            "restricted_max": self.evaluation.restricted_max,
            "horodecki_max": self.evaluation.horodecki_max,
            "violation_restricted": self.evaluation.violation_restricted,
            "violation_horodecki": self.evaluation.violation_horodecki,
            "p_excited": self.p_excited_a,
            "p_excited_b": self.p_excited_b,
        }
