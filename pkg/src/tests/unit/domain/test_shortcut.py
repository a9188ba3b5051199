"""Unit tests for the closed-form shortcut drive."""

import math

import numpy as np
import pytest

from src.domain.driving.services import intermediate_h
from src.domain.shared.exceptions import CotangentSingularity, GammaUnderflow, InvariantViolation
from src.domain.stirap.services import lambda_system, pulse_shapes, shortcut
from src.domain.stirap.services.drive_schedules import OriginalDrive, ShortcutDrive, build_drive
from src.domain.stirap.value_objects.lambda_drive import MixingAngles
from src.domain.stirap.value_objects.shortcut_frame import ShortcutFrame
from src.tests.utils.factories import FrameFactory, PulseParamsFactory


@pytest.mark.unit
@pytest.mark.domain
class TestShortcutFrame:
    """Test cases for frame assembly and the closure relation."""

    def test_centre_amplitude(self, reference_params):
        """At t = 0 the closing amplitude is pi / (4 tau sin(0.1 pi) sin(2 pi/5))."""
        # Act
        frame = shortcut.frame_at(0.0, reference_params)

        # Assert
        expected = math.pi / (4 * 0.115 * math.sin(0.1 * math.pi) * math.sin(2 * math.pi / 5))
        assert frame.xi_tilde == pytest.approx(expected, rel=1e-12)
        assert frame.xi_tilde == pytest.approx(23.24, abs=0.01)

    def test_direct_coupling_cancels(self):
        """The 1-3 residual vanishes for every frame."""
        for frame in FrameFactory.create_frame_batch(100):
            assert abs(frame.f13_residual) <= 1e-12 * max(1.0, frame.theta_dot)

    def test_closure_is_enforced(self):
        """A frame whose amplitude breaks the closure is rejected."""
        frame = ShortcutFrame.from_angles(theta=0.5, theta_dot=2.0, gamma=0.3, gamma_dot=0.0, phi=math.pi / 5)
        with pytest.raises(InvariantViolation):
            ShortcutFrame(0.5, 2.0, 0.3, 0.0, math.pi / 5, frame.xi_tilde * 1.001)

    @pytest.mark.parametrize("gamma", [0.0, -0.1, math.pi / 2])
    def test_gamma_range_is_enforced(self, gamma):
        """gamma must lie strictly between 0 and pi/2."""
        with pytest.raises(InvariantViolation):
            ShortcutFrame(0.5, 2.0, gamma, 0.0, math.pi / 5, 1.0)

    def test_underflowing_gamma_raises(self):
        """A vanishing shortcut angle cannot close the frame."""
        p = PulseParamsFactory.create_reference_params(gamma0=1e-14)
        with pytest.raises(GammaUnderflow):
            shortcut.frame_at(0.0, p)

    def test_amplitude_diverges_as_gamma0_shrinks(self):
        """Smaller gamma0 needs a larger closing amplitude."""
        amplitudes = [
            shortcut.frame_at(0.0, PulseParamsFactory.create_reference_params(gamma0=g)).xi_tilde
            for g in (0.1, 0.01, 0.001)
        ]
        assert amplitudes[0] < amplitudes[1] < amplitudes[2]
        assert amplitudes[2] > 1e3


@pytest.mark.unit
@pytest.mark.domain
class TestCorrectionCoefficients:
    """Test cases for the lambda/kappa products."""

    def test_products_from_closure(self):
        """kappa_a theta_dot equals theta_dot and lambda_p = lambda_s."""
        for frame in FrameFactory.create_frame_batch(20, seed=3):
            # Act
            products = shortcut.lambda_kappa_coeffs(frame)

            # Assert
            assert products.kappa_a_thetadot == pytest.approx(frame.theta_dot, rel=1e-12)
            assert products.lambda_p_xi == products.lambda_s_xi
            assert products.lambda_p_xi == pytest.approx(frame.xi_tilde * math.cos(frame.gamma), rel=1e-14)

    def test_kappa_products_vanish_with_gamma(self):
        """As gamma -> 0 the kappa_p and kappa_s products become negligible next to lambda_p Xi."""
        # Arrange
        frame = ShortcutFrame.from_angles(theta=0.7, theta_dot=2.0, gamma=1e-7, gamma_dot=0.0, phi=math.pi / 5)

        # Act
        products = shortcut.lambda_kappa_coeffs(frame)

        # Assert
        assert products.lambda_p_xi == pytest.approx(frame.xi_tilde, rel=1e-12)
        assert abs(products.kappa_p_phidot) < 1e-6 * products.lambda_p_xi
        assert abs(products.kappa_s_phidot) < 1e-6 * products.lambda_p_xi

    @pytest.mark.parametrize("theta", [0.0, math.pi / 2])
    def test_cotangent_singularity(self, theta):
        """The kappa products are undefined at theta = 0 and pi/2."""
        frame = ShortcutFrame.from_angles(theta=theta, theta_dot=1.0, gamma=0.2, gamma_dot=0.0, phi=math.pi / 5)
        with pytest.raises(CotangentSingularity):
            shortcut.lambda_kappa_coeffs(frame)

    def test_intermediate_h0_is_finite_at_singular_theta(self):
        """Entry-level products stay finite where the cotangent diverges."""
        frame = ShortcutFrame.from_angles(theta=0.0, theta_dot=1.0, gamma=0.2, gamma_dot=0.0, phi=math.pi / 5)
        assert np.all(np.isfinite(shortcut.intermediate_h0(frame)))

    def test_mask_reproduces_intermediate_hamiltonian(self):
        """The generic elementwise correction of H0 and H_cd rebuilds the closed-form intermediate operator."""
        for frame in FrameFactory.create_frame_batch(10, seed=11):
            # Arrange
            xi0, phi_dot_ref = 10.0, 0.5
            h0 = lambda_system.h0(MixingAngles(theta=frame.theta, phi=frame.phi, xi0=xi0).to_drive())
            h_cd = lambda_system.h_cd(frame.theta_dot, phi_dot_ref, frame.theta)
            mask = shortcut.coefficient_mask(frame, xi0, phi_dot_ref)

            # Act
            assembled = intermediate_h(h0, h_cd, mask)

            # Assert
            np.testing.assert_allclose(assembled, shortcut.intermediate_h0(frame), atol=1e-10 * frame.xi_tilde)


@pytest.mark.unit
@pytest.mark.domain
class TestIntermediateEigenvectors:
    """Test cases for the intermediate eigenbasis."""

    def test_orthonormal(self):
        """The Gram matrix is the identity at random frames."""
        for frame in FrameFactory.create_frame_batch(100, seed=5):
            sample = shortcut.intermediate_eigvecs(frame)
            np.testing.assert_allclose(sample.gram(), np.eye(3), atol=1e-12)

    def test_eigenpairs_of_intermediate_hamiltonian(self):
        """Each vector is an eigenvector of the intermediate operator with its closed-form energy."""
        for frame in FrameFactory.create_frame_batch(20, seed=9):
            # Arrange
            matrix = shortcut.intermediate_h0(frame)
            sample = shortcut.intermediate_eigvecs(frame)

            # Assert
            for k in range(3):
                v = sample.vector(k)
                np.testing.assert_allclose(matrix @ v, sample.energies[k] * v, atol=1e-8 * frame.xi_tilde)

    def test_reduces_to_reference_spectrum(self):
        """With gamma = 0 the vectors are the reference eigenvectors."""
        # Arrange
        theta, phi = 0.8, math.pi / 5

        # Act
        vectors = shortcut.intermediate_vectors(theta, 0.0, phi)
        reference = lambda_system.spectrum_h0(MixingAngles(theta=theta, phi=phi, xi0=1.0))

        # Assert
        np.testing.assert_allclose(vectors, reference.vectors, atol=1e-15)

    def test_excited_population_along_dark_path(self):
        """The dark path holds sin^2(gamma) in the excited level."""
        for gamma in (0.05, 0.2, 0.5):
            zero = shortcut.intermediate_vectors(0.4, gamma, math.pi / 5)[:, 0]
            assert abs(zero[1]) ** 2 == pytest.approx(math.sin(gamma) ** 2, rel=1e-14)

    def test_energies(self, reference_params):
        """Upper and lower energies follow the closing amplitude."""
        frame = shortcut.frame_at(0.0, reference_params)
        energies = shortcut.intermediate_energies(frame)
        sp2, cp2 = math.sin(math.pi / 5) ** 2, math.cos(math.pi / 5) ** 2
        expected_zero = frame.xi_tilde * (sp2 ** 2 - cp2 ** 2) * math.tan(frame.gamma) ** 2
        np.testing.assert_allclose(energies, [expected_zero, frame.xi_tilde * cp2, -frame.xi_tilde * sp2], rtol=1e-14)


@pytest.mark.unit
@pytest.mark.domain
class TestModifiedDrive:
    """Test cases for the synthesised pump/Stokes drive."""

    def test_polar_identity(self):
        """Pump and Stokes amplitudes recombine into omega0 at random frames."""
        for frame in FrameFactory.create_frame_batch(100, seed=21):
            drive = shortcut.modified_drive(frame)
            assert math.hypot(drive.omega_p_t, drive.omega_s_t) == pytest.approx(drive.omega0_t, rel=1e-12)
            assert drive.omega0_t * math.sin(drive.theta_t) == pytest.approx(drive.omega_p_t, rel=1e-12)

    def test_phase_free_limit(self):
        """gamma -> 0 with gamma_dot = 0 removes the phases."""
        # Arrange
        theta, phi = 0.6, math.pi / 5
        frame = ShortcutFrame.from_angles(theta=theta, theta_dot=1.0, gamma=1e-8, gamma_dot=0.0, phi=phi)

        # Act
        drive = shortcut.modified_drive(frame)

        # Assert
        expected = frame.xi_tilde * math.sin(theta) * math.sin(2 * phi)
        assert drive.omega_p_t == pytest.approx(expected, rel=1e-12)
        assert abs(drive.phase_p) < 1e-7

    def test_centre_amplitude(self, reference_params):
        """The amplitude at t = 0 is close to 21.5/T."""
        assert shortcut.modified_drive(shortcut.frame_at(0.0, reference_params)).omega0_t == pytest.approx(21.53, abs=0.01)

    def test_columns_match_pointwise_drive(self, reference_params):
        """The vectorised columns agree with the scalar drive."""
        # Arrange
        times = np.linspace(-0.5, 0.5, 9)

        # Act
        columns = shortcut.drive_columns(times, reference_params)

        # Assert
        for k, t in enumerate(times):
            drive = shortcut.modified_drive(shortcut.frame_at(float(t), reference_params))
            assert columns.omega_p[k] == pytest.approx(drive.omega_p_t, rel=1e-12)
            assert columns.omega_s[k] == pytest.approx(drive.omega_s_t, rel=1e-12)
            assert columns.phase_p[k] == pytest.approx(drive.phase_p, abs=1e-12)
            assert columns.phase_s[k] == pytest.approx(drive.phase_s, abs=1e-12)
            assert columns.delta[k] == pytest.approx(drive.delta_t, rel=1e-12)
            assert columns.omega0[k] == pytest.approx(drive.omega0_t, rel=1e-12)

    def test_lambda_zero_pattern(self, shortcut_drive):
        """The transitionless Hamiltonian never couples 1 and 3 directly."""
        for t in np.linspace(-0.5, 0.5, 21):
            matrix = shortcut_drive.hamiltonian(float(t))
            assert matrix[0, 0] == 0 and matrix[2, 2] == 0
            assert matrix[0, 2] == 0 and matrix[2, 0] == 0
            np.testing.assert_allclose(matrix, matrix.conj().T, atol=1e-14)

    def test_scalar_and_stacked_hamiltonians_agree(self, shortcut_drive):
        """h_tilde and the vectorised stack describe the same operator."""
        times = np.linspace(-0.45, 0.45, 7)
        stack = shortcut_drive.hamiltonians(times)
        for k, t in enumerate(times):
            np.testing.assert_allclose(stack[k], shortcut_drive.hamiltonian(float(t)), rtol=1e-12, atol=1e-12)

    def test_reference_gamma_recovers_frame_gamma(self):
        """The adiabatic-reference rotation reproduces gamma on a closed frame."""
        for frame in FrameFactory.create_frame_batch(20, seed=13):
            assert shortcut.reference_gamma(frame) == pytest.approx(frame.gamma, rel=1e-12)


@pytest.mark.unit
@pytest.mark.domain
class TestSmallDetuningApproximation:
    """Test cases for the near-resonance expansion."""

    def test_exact_at_resonance(self):
        """At phi = pi/4 the expansion is exact."""
        p = PulseParamsFactory.create_reference_params(phi=math.pi / 4)
        for t in np.linspace(-0.45, 0.45, 19):
            approx = shortcut.small_detuning_approx(shortcut.frame_at(float(t), p))
            assert approx.omega0_relative_error < 1e-10
            assert approx.theta_error < 1e-10

    def test_small_error_near_resonance(self):
        """phi = pi/4 - 0.01 stays within one percent across the window."""
        p = PulseParamsFactory.create_reference_params(phi=math.pi / 4 - 0.01)
        errors = [
            shortcut.small_detuning_approx(shortcut.frame_at(float(t), p)).omega0_relative_error
            for t in np.linspace(-0.5, 0.5, 41)
        ]
        assert max(errors) < 0.01

    def test_error_grows_away_from_resonance(self):
        """The centre error grows as phi moves away from pi/4 and reaches a few percent at pi/5."""
        # Arrange
        phis = [math.pi / 4 - 0.01, math.pi / 4 - 0.05, math.pi / 4 - 0.1, math.pi / 5]

        # Act
        errors = [
            shortcut.small_detuning_approx(
                shortcut.frame_at(0.0, PulseParamsFactory.create_reference_params(phi=phi))
            ).omega0_relative_error
            for phi in phis
        ]

        # Assert
        assert errors == sorted(errors)
        assert errors[0] == pytest.approx(9.3e-5, rel=0.05)
        assert errors[-1] == pytest.approx(0.0243, abs=0.001)


@pytest.mark.unit
@pytest.mark.domain
class TestDriveSchedules:
    """Test cases for the drive schedules."""

    def test_original_drive_matches_reference_hamiltonian(self, original_drive, reference_params):
        """The uncorrected schedule is h0 with a flat amplitude."""
        for t in (-0.3, 0.0, 0.2):
            expected = lambda_system.h0(lambda_system.drive_at(t, reference_params, 16.0))
            np.testing.assert_allclose(original_drive.hamiltonian(t), expected, atol=1e-13)

    def test_original_drive_columns(self, original_drive):
        """The uncorrected schedule has no phases and no shortcut angle."""
        columns = original_drive.columns(np.linspace(-0.5, 0.5, 5))
        np.testing.assert_allclose(columns.omega0, 16.0, rtol=1e-14)
        assert np.all(columns.phase_p == 0) and np.all(columns.gamma == 0)

    def test_super_gaussian_envelope(self):
        """The original schedule can use the super-Gaussian envelope."""
        p = PulseParamsFactory.create_reference_params(chi=20.0, T0=0.5, n=3)
        drive = OriginalDrive(p, envelope="super_gaussian")
        assert drive.columns(np.array([0.0])).omega0[0] == pytest.approx(20.0)

    def test_shortcut_columns_carry_gamma(self, shortcut_drive, reference_params):
        """Shortcut columns record the shortcut angle."""
        columns = shortcut_drive.columns(np.array([0.0]))
        assert columns.gamma[0] == pytest.approx(float(pulse_shapes.gamma(0.0, reference_params)))

    def test_build_drive(self, reference_params):
        """Drives are built by mode name."""
        assert isinstance(build_drive(reference_params, "shortcut"), ShortcutDrive)
        assert isinstance(build_drive(reference_params, "original"), OriginalDrive)
        with pytest.raises(InvariantViolation):
            build_drive(reference_params, "noisy")
