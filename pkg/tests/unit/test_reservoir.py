"""Tests for reservoir models."""

import math

import numpy as np
import pytest

from chshtrap.core.exceptions import ConfigurationError, DomainError
from chshtrap.reservoir import (
    LorentzianReservoir,
    MarkovianReservoir,
    ReservoirKind,
    TimeGrid,
    TrappingReservoir,
    asymptotic_population_parameter,
    q_of_t,
    reservoir_from_mapping,
    trajectory,
)


class TestMarkovian:
    """Tests for the memoryless reservoir."""

    def test_exponential_decay(self):
        """x(t) = exp(-gamma0 t)."""
        model = MarkovianReservoir(gamma0=2.0)
        assert q_of_t(model, 0.0).value == pytest.approx(1.0)
        assert q_of_t(model, 1.0).population_parameter == pytest.approx(math.exp(-2.0))

    def test_rate_must_be_positive(self):
        """gamma0 must be positive."""
        with pytest.raises(DomainError):
            MarkovianReservoir(gamma0=0.0)

    def test_negative_time_rejected(self):
        """Negative times are rejected by name."""
        with pytest.raises(DomainError) as exc:
            q_of_t(MarkovianReservoir(gamma0=1.0), -1.0)
        assert exc.value.parameter == "t"


class TestLorentzian:
    """Tests for the Lorentzian pseudomode reservoir."""

    @pytest.mark.parametrize("width", [0.05, 0.5, 2.0, 10.0])
    def test_bounded_and_starts_at_one(self, width):
        """|q(t)| starts at one and never exceeds it."""
        model = LorentzianReservoir(gamma0=1.0, spectral_width=width)
        assert q_of_t(model, 0.0).value == pytest.approx(1.0)
        for t in np.linspace(0.0, 200.0, 401):
            assert q_of_t(model, float(t)).modulus <= 1.0

    def test_weak_coupling_approaches_markovian(self):
        """lambda >> gamma0 recovers exp(-gamma0 t / 2)."""
        model = LorentzianReservoir(gamma0=1.0, spectral_width=1e4)
        assert q_of_t(model, 2.0).value.real == pytest.approx(math.exp(-1.0), rel=1e-3)

    def test_critical_damping_limit(self):
        """d = 0 at lambda = 2 gamma0."""
        model = LorentzianReservoir(gamma0=1.0, spectral_width=2.0)
        t = 1.5
        expected = math.exp(-t) * (1.0 + t)
        assert q_of_t(model, t).value.real == pytest.approx(expected, rel=1e-12)

    def test_continuous_across_critical_point(self):
        """q(t) is continuous through lambda = 2 gamma0."""
        below = q_of_t(LorentzianReservoir(gamma0=1.0, spectral_width=2.0 - 1e-7), 1.5)
        above = q_of_t(LorentzianReservoir(gamma0=1.0, spectral_width=2.0 + 1e-7), 1.5)
        assert below.value.real == pytest.approx(above.value.real, abs=1e-6)

    def test_strong_coupling_oscillates(self):
        """Revivals: q(t) changes sign in the strong-coupling regime."""
        model = LorentzianReservoir(gamma0=1.0, spectral_width=0.1)
        assert model.oscillating
        values = [q_of_t(model, float(t)).value.real for t in np.linspace(0.0, 20.0, 201)]
        assert min(values) < 0.0

    def test_no_overflow_at_long_times(self):
        """Weak coupling at long times underflows to zero without overflow."""
        model = LorentzianReservoir(gamma0=1.0, spectral_width=50.0)
        assert q_of_t(model, 1e4).population_parameter == pytest.approx(0.0, abs=1e-12)


class TestTrapping:
    """Tests for the population-trapping reservoir."""

    def test_never_below_w_squared(self):
        """x(t) stays at or above w^2."""
        model = TrappingReservoir(gamma0=1.0, w=0.95)
        for t in np.linspace(0.0, 50.0, 101):
            assert q_of_t(model, float(t)).population_parameter >= 0.95**2

    def test_asymptotic_limit(self):
        """Long-time limits are w^2 for trapping and 0 otherwise."""
        assert asymptotic_population_parameter(TrappingReservoir(1.0, 0.9)) == pytest.approx(0.81)
        assert asymptotic_population_parameter(MarkovianReservoir(1.0)) == 0.0
        assert asymptotic_population_parameter(LorentzianReservoir(1.0, 0.1)) == 0.0

    def test_w_one_is_constant(self):
        """w = 1 freezes the amplitude."""
        model = TrappingReservoir(gamma0=1.0, w=1.0)
        assert q_of_t(model, 7.0).value == pytest.approx(1.0)

    def test_w_range(self):
        """w above one is rejected."""
        with pytest.raises(DomainError):
            TrappingReservoir(gamma0=1.0, w=1.1)


class TestTrajectory:
    """Tests for time grids and trajectories."""

    def test_grid(self):
        """Grids are uniform and include both ends."""
        grid = TimeGrid(t0=0.0, t1=2.0, n=5)
        np.testing.assert_allclose(grid.times, [0.0, 0.5, 1.0, 1.5, 2.0])

    @pytest.mark.parametrize(
        "t0,t1,n",
        [(-1.0, 1.0, 5), (1.0, 1.0, 5), (0.0, 1.0, 1)],
    )
    def test_grid_validation(self, t0, t1, n):
        """Negative starts, empty spans and single points are rejected."""
        with pytest.raises(DomainError):
            TimeGrid(t0=t0, t1=t1, n=n)

    def test_trajectory_samples(self):
        """Samples carry the grid times and x = |q|^2."""
        samples = trajectory(MarkovianReservoir(1.0), TimeGrid(0.0, 1.0, 3))
        assert [s.t for s in samples] == pytest.approx([0.0, 0.5, 1.0])
        assert samples[-1].x == pytest.approx(math.exp(-1.0))

    @pytest.mark.parametrize("gamma0", [1.0, 2.0])
    def test_markovian_integer_decay_times(self, gamma0):
        """Six samples over five decay times give x = 1, e^-1, ..., e^-5."""
        grid = TimeGrid(t0=0.0, t1=5.0 / gamma0, n=6)
        x = [s.x for s in trajectory(MarkovianReservoir(gamma0=gamma0), grid)]
        np.testing.assert_allclose(x, np.exp(-np.arange(6.0)), rtol=1e-12)

    @pytest.mark.parametrize(
        "model",
        [
            MarkovianReservoir(gamma0=1.0),
            MarkovianReservoir(gamma0=3.0),
            TrappingReservoir(gamma0=1.0, w=0.95),
            TrappingReservoir(gamma0=1.0, w=0.0),
            TrappingReservoir(gamma0=0.5, w=0.5),
        ],
        ids=lambda m: m.describe(),
    )
    def test_monotone_non_increasing(self, model):
        """Markovian and trapping populations never revive."""
        x = np.array([s.x for s in trajectory(model, TimeGrid(t0=0.0, t1=60.0, n=2001))])
        assert x[0] == pytest.approx(1.0)
        assert (np.diff(x) <= 0.0).all()


class TestFromMapping:
    """Tests for building models from config keys."""

    def test_markovian(self):
        """Model names are case-insensitive."""
        model = reservoir_from_mapping({"model": "Markovian", "gamma0": 2.0})
        assert model.kind is ReservoirKind.MARKOVIAN
        assert model.gamma0 == 2.0

    def test_lorentzian(self):
        """lambda maps to the spectral width."""
        model = reservoir_from_mapping({"model": "lorentzian", "lambda": 0.3})
        assert isinstance(model, LorentzianReservoir)
        assert model.spectral_width == 0.3
        assert "strong coupling" in model.describe()

    def test_trapping_requires_w(self):
        """Trapping without w names the missing key."""
        with pytest.raises(ConfigurationError) as exc:
            reservoir_from_mapping({"model": "trapping"})
        assert exc.value.config_key == "w"

    def test_unknown_model(self):
        """Unknown models name the model key."""
        with pytest.raises(ConfigurationError) as exc:
            reservoir_from_mapping({"model": "ohmic"})
        assert exc.value.config_key == "model"
