"""Tests for core types."""

import math

import numpy as np
import pytest

from chshtrap.core.exceptions import DomainError
from chshtrap.core.types import (
    ChshSettings,
    DecoherenceAmplitude,
    EWLParams,
    Evaluator,
    MeasurementDirection,
    StateFamily,
    TwoQubitState,
    XStateView,
    is_violation,
)


class TestEnums:
    """Tests for enum parsing."""

    def test_family_parse_case_insensitive(self):
        """Family names parse regardless of case and padding."""
        assert StateFamily.parse("PHI") is StateFamily.PHI
        assert StateFamily.parse(" psi ") is StateFamily.PSI

    def test_family_parse_unknown(self):
        """Unknown families are rejected by name."""
        with pytest.raises(DomainError) as exc:
            StateFamily.parse("chi")
        assert exc.value.parameter == "family"

    def test_evaluator_parse(self):
        """Evaluator names parse; unknown ones raise."""
        assert Evaluator.parse("Horodecki") is Evaluator.HORODECKI
        with pytest.raises(DomainError):
            Evaluator.parse("brute")


class TestDecoherenceAmplitude:
    """Tests for the decoherence amplitude q."""

    def test_population_parameter(self):
        """x = |q|^2."""
        q = DecoherenceAmplitude(0.6 + 0.8j)
        assert q.population_parameter == pytest.approx(1.0)
        assert q.modulus == pytest.approx(1.0)

    def test_rejects_modulus_above_one(self):
        """|q| above one is rejected."""
        with pytest.raises(DomainError):
            DecoherenceAmplitude(1.01)

    def test_rejects_non_finite(self):
        """NaN amplitudes are rejected."""
        with pytest.raises(DomainError):
            DecoherenceAmplitude(complex(float("nan"), 0.0))

    def test_from_population(self):
        """x = 0.25 gives the real amplitude 0.5."""
        q = DecoherenceAmplitude.from_population(0.25)
        assert q.value == pytest.approx(0.5)
        assert q.phase == 0.0

    def test_from_population_out_of_range(self):
        """x above one is rejected."""
        with pytest.raises(DomainError):
            DecoherenceAmplitude.from_population(1.5)


class TestMeasurementDirection:
    """Tests for measurement directions."""

    def test_range_checks(self):
        """theta and phi must lie in their ranges."""
        with pytest.raises(DomainError):
            MeasurementDirection(theta=-0.1)
        with pytest.raises(DomainError):
            MeasurementDirection(theta=1.0, phi=2 * math.pi)

    def test_normalized_preserves_unit_vector(self):
        """Normalization changes angles, not the direction."""
        raw_theta, raw_phi = 4.0, -1.0
        direction = MeasurementDirection.normalized(raw_theta, raw_phi)
        expected = np.array(
            [
                math.sin(raw_theta) * math.cos(raw_phi),
                math.sin(raw_theta) * math.sin(raw_phi),
                math.cos(raw_theta),
            ]
        )
        assert 0.0 <= direction.theta <= math.pi
        assert 0.0 <= direction.phi < 2 * math.pi
        np.testing.assert_allclose(direction.unit_vector, expected, atol=1e-12)

    def test_settings_from_angles(self):
        """Angle order is theta, phi per direction."""
        settings = ChshSettings.from_angles([0, 0, math.pi / 2, 0, 1, 2, 3, 4])
        assert settings.as_angles()[:4] == pytest.approx((0, 0, math.pi / 2, 0))

    def test_settings_need_eight_angles(self):
        """Fewer than eight angles are rejected."""
        with pytest.raises(DomainError):
            ChshSettings.from_angles([0.0] * 6)


class TestStateTypes:
    """Tests for state containers."""

    def test_state_is_read_only(self, bell_state):
        """Stored matrices cannot be mutated."""
        with pytest.raises(ValueError):
            bell_state.elements[0, 0] = 1.0

    def test_state_shape_checked(self):
        """Only 4x4 matrices are accepted."""
        with pytest.raises(DomainError):
            TwoQubitState(np.eye(3))

    def test_state_dict_round_trip(self, phi_state):
        """Serialized states restore exactly."""
        restored = TwoQubitState.from_dict(phi_state.to_dict())
        assert restored.allclose(phi_state, atol=0.0)

    def test_from_dict_rejects_other_basis(self, phi_state):
        """A different basis label is refused."""
        data = phi_state.to_dict() | {"basis": "00,01,10,11"}
        with pytest.raises(DomainError):
            TwoQubitState.from_dict(data)

    def test_x_view_to_state(self):
        """The view fills the diagonal and anti-diagonal."""
        view = XStateView(0.1, 0.2, 0.3, 0.4, 0.05, 0.1, math.pi / 2, 0.0)
        state = view.to_state()
        assert state[0, 3] == pytest.approx(0.05j)
        assert state[3, 0] == pytest.approx(-0.05j)
        assert state[1, 2] == pytest.approx(0.1)
        assert state.populations == pytest.approx((0.1, 0.2, 0.3, 0.4))

    def test_ewl_beta(self):
        """beta = sqrt(1 - alpha^2)."""
        params = EWLParams(family=StateFamily.PHI, r=0.5, alpha=0.6)
        assert params.beta == pytest.approx(0.8)
        assert params.with_purity(0.9).r == 0.9
        assert params.to_dict()["family"] == "phi"


class TestViolation:
    """Tests for the violation predicate."""

    def test_two_is_not_a_violation(self):
        """B = 2 and values within the slack do not violate."""
        assert is_violation(2.0) is False
        assert is_violation(2.0 + 1e-13) is False

    def test_above_two(self):
        """Values clearly above 2 violate."""
        assert is_violation(2.001) is True

    def test_missing_value(self):
        """Missing values propagate as None."""
        assert is_violation(None) is None
