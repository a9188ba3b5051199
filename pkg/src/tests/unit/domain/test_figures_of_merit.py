"""Unit tests for pulse area, excited-state exposure and peak amplitude."""

import math

import numpy as np
import pytest

from src.domain.numerics import time_grid
from src.domain.shared.exceptions import InvariantViolation
from src.domain.stirap.services import figures_of_merit as fom
from src.domain.stirap.services import shortcut


@pytest.mark.unit
@pytest.mark.domain
class TestMonotonicTrend:
    """Test cases for trend classification."""

    @pytest.mark.parametrize("values,expected", [
        ([1, 2, 3], fom.Trend.STRICTLY_INCREASING),
        ([3, 2, 1], fom.Trend.STRICTLY_DECREASING),
        ([1, 1, 2], fom.Trend.NEITHER),
        ([1, 3, 2], fom.Trend.NEITHER),
        ([5], fom.Trend.NEITHER),
    ])
    def test_classification(self, values, expected):
        """Only strict runs count as monotone."""
        assert fom.monotonic_trend(values) is expected


@pytest.mark.unit
@pytest.mark.domain
class TestPulseArea:
    """Test cases for the pulse area."""

    def test_area_uses_combined_amplitude(self, reference_params):
        """pulse_area integrates hypot(Op, Os)."""
        # Arrange
        times = time_grid(-0.5, 0.5, 512)
        columns = shortcut.drive_columns(times, reference_params)

        # Act
        area = fom.pulse_area(times, columns.omega_p, columns.omega_s)

        # Assert
        assert area.radians == pytest.approx(
            fom.pulse_area_from_amplitude(times, columns.omega0).radians, rel=1e-12
        )
        assert area.over_pi == pytest.approx(area.radians / math.pi)

    def test_area_is_trapezoid_of_samples(self, reference_params):
        """The area equals the trapezoid of the same amplitude samples."""
        times = time_grid(-0.5, 0.5, 4096)
        amplitude = shortcut.drive_columns(times, reference_params).omega0
        expected = float(np.sum(0.5 * (amplitude[1:] + amplitude[:-1]) * np.diff(times)))
        assert fom.pulse_area_from_amplitude(times, amplitude).radians == pytest.approx(expected, rel=1e-10)


@pytest.mark.unit
@pytest.mark.domain
class TestExcitedPopulation:
    """Test cases for the average excited population and exposure."""

    def test_reference_value(self):
        """gamma0 = 0.1 gives about 0.0323."""
        assert fom.p2_bar(0.1) == pytest.approx(0.5 - math.sin(0.2 * math.pi) / (0.4 * math.pi), rel=1e-15)
        assert fom.p2_bar(0.1) == pytest.approx(0.03226, abs=1e-5)

    @pytest.mark.parametrize("gamma0", [0.05, 0.1, 0.2, 0.35, 0.5])
    def test_closed_form_matches_quadrature(self, gamma0):
        """The closed form is the mean of sin^2 over [0, pi gamma0]."""
        assert fom.p2_bar(gamma0) == pytest.approx(fom.p2_bar_integral(0.0, math.pi * gamma0), rel=1e-10)

    def test_half_turn_average(self):
        """gamma0 = 0.5 averages sin^2 over a half period."""
        assert fom.p2_bar(0.5) == pytest.approx(0.5, abs=1e-15)

    @pytest.mark.parametrize("gamma0", [0.0, -0.1, 0.6])
    def test_out_of_range_gamma0(self, gamma0):
        """gamma0 outside (0, 0.5] is rejected."""
        with pytest.raises(InvariantViolation):
            fom.p2_bar(gamma0)

    def test_empty_quadrature_range(self):
        """The averaging interval must be non-empty."""
        with pytest.raises(InvariantViolation):
            fom.p2_bar_integral(0.3, 0.3)

    def test_epsilon_is_a_product(self):
        """epsilon = Gamma_a P2_bar T Omega_max, not clipped to one."""
        assert fom.epsilon(0.5, 0.2, 30.0) == pytest.approx(3.0)

    def test_negative_inputs_raise(self):
        """Rates, populations and amplitudes are non-negative."""
        with pytest.raises(InvariantViolation, match="gamma_a"):
            fom.epsilon(-0.1, 0.2, 10.0)


@pytest.mark.unit
@pytest.mark.domain
class TestPeakAmplitude:
    """Test cases for the peak modified amplitude."""

    def test_center_amplitude(self, reference_params):
        """The t = 0 amplitude is about 21.53/T for the reference parameters."""
        assert fom.center_amplitude(reference_params) == pytest.approx(21.53, abs=0.01)

    def test_closed_form_prefactor(self, reference_params):
        """The published prefactor is four times the derived one."""
        # Act
        closed = fom.closed_form_peak(reference_params)

        # Assert
        assert closed == pytest.approx(4 * fom.center_amplitude(reference_params), rel=1e-14)
        assert closed == pytest.approx(86.1, abs=0.1)

    def test_grid_maximum(self, reference_params):
        """The grid maximum is the drive amplitude at its argmax and at least the centre value."""
        # Act
        peak = fom.omega_max(reference_params)

        # Assert
        at_argmax = shortcut.drive_columns(np.array([peak.t_argmax]), reference_params).omega0[0]
        assert peak.numeric_max == pytest.approx(at_argmax, rel=1e-3)
        assert peak.numeric_max >= peak.at_center * (1 - 1e-12)
        assert peak.closed_form_peak == fom.closed_form_peak(reference_params)


@pytest.mark.unit
@pytest.mark.domain
@pytest.mark.slow
class TestEpsilonSweep:
    """Test cases for the exposure sweeps."""

    def test_increases_with_gamma0(self, reference_params):
        """Larger shortcut angles expose the excited level more."""
        sweep = fom.epsilon_sweep("gamma0", [0.08, 0.1, 0.12, 0.15, 0.2], reference_params)
        assert sweep.trend is fom.Trend.STRICTLY_INCREASING
        assert len(sweep.epsilons) == 5

    def test_decreases_with_phi(self, reference_params):
        """Moving towards resonance lowers the exposure."""
        sweep = fom.epsilon_sweep("phi", [math.pi / 6, math.pi / 5, 0.7, math.pi / 4], reference_params)
        assert sweep.trend is fom.Trend.STRICTLY_DECREASING

    def test_unknown_axis(self, reference_params):
        """Only gamma0 and phi can be swept."""
        with pytest.raises(InvariantViolation):
            fom.epsilon_sweep("tau", [0.1], reference_params)
