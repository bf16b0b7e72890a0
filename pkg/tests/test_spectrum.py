"""Tests for the plate geometry and mode basis."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from platevac.errors import DomainError
from platevac.spectrum import (
    BoundaryCondition,
    ModeIndex,
    PlateConfig,
    k_n,
    mode_profile,
    omega,
    orthonormality_check,
)

D = BoundaryCondition.DIRICHLET
N = BoundaryCondition.NEUMANN


class TestTypes:
    def test_sign_convention(self):
        assert D.sign_upper == 1
        assert N.sign_upper == -1

    def test_plate_config_validation(self):
        with pytest.raises(ValueError):
            PlateConfig(0.0)
        with pytest.raises(ValueError):
            PlateConfig(-1.0)

    def test_mode_index_validation(self):
        with pytest.raises(ValueError):
            ModeIndex(0)
        with pytest.raises(ValueError):
            ModeIndex(1, (1.0, 2.0, 3.0))


class TestWavenumbers:
    @pytest.mark.parametrize("L,n,expected", [(1.0, 1, math.pi), (2.0, 4, 2.0 * math.pi),
                                              (0.5, 3, 6.0 * math.pi)])
    def test_k_n(self, L, n, expected):
        assert k_n(PlateConfig(L), n) == pytest.approx(expected, rel=1e-15)

    def test_k_n_rejects_zero_mode(self):
        with pytest.raises(ValueError):
            k_n(PlateConfig(1.0), 0)

    def test_omega_pure_longitudinal(self):
        assert omega(PlateConfig(1.0), ModeIndex(1)) == pytest.approx(math.pi, rel=1e-15)

    def test_omega_with_transverse(self):
        value = omega(PlateConfig(1.0), ModeIndex(3, (4.0, 0.0)))
        assert value == pytest.approx(math.sqrt(16.0 + 9.0 * math.pi**2), rel=1e-15)

    @given(st.floats(min_value=-20.0, max_value=20.0), st.floats(min_value=-20.0, max_value=20.0))
    @settings(max_examples=60, deadline=None)
    def test_omega_bounded_below_by_k_n(self, kx, ky):
        config = PlateConfig(1.0)
        assert omega(config, ModeIndex(2, (kx, ky))) >= k_n(config, 2)

    @given(st.floats(min_value=0.1, max_value=10.0))
    @settings(max_examples=40, deadline=None)
    def test_inverse_length_scaling(self, lam):
        base = PlateConfig(1.0)
        scaled = PlateConfig(lam)
        assert k_n(scaled, 5) == pytest.approx(k_n(base, 5) / lam, rel=1e-14)
        mode = ModeIndex(2, (3.0, 0.0))
        mode_scaled = ModeIndex(2, (3.0 / lam, 0.0))
        assert omega(scaled, mode_scaled) == pytest.approx(omega(base, mode) / lam, rel=1e-14)


class TestModeProfile:
    def test_dirichlet_vanishes_on_plates(self):
        config = PlateConfig(1.0)
        assert mode_profile(D, config, 1, 0.0) == 0.0
        assert abs(mode_profile(D, config, 1, 1.0)) < 1e-15
        assert abs(mode_profile(D, config, 7, 1.0)) < 1e-14

    def test_neumann_plate_value(self):
        assert mode_profile(N, PlateConfig(1.0), 2, 0.0) == pytest.approx(math.sqrt(2.0))

    def test_dirichlet_midpoint(self):
        assert mode_profile(D, PlateConfig(1.0), 1, 0.5) == pytest.approx(math.sqrt(2.0))

    @pytest.mark.parametrize("n", [1, 2, 5])
    @pytest.mark.parametrize("L", [1.0, 2.5])
    def test_neumann_derivative_vanishes_on_plates(self, n, L):
        config = PlateConfig(L)
        # the stencil cannot leave the slab, so the difference is one-sided
        # with O(k^2 h) truncation; h must sit below 2e-6/k^2 per mode
        h = 1e-8 * L
        kn = k_n(config, n)
        left = (mode_profile(N, config, n, h) - mode_profile(N, config, n, 0.0)) / h
        right = (mode_profile(N, config, n, L) - mode_profile(N, config, n, L - h)) / h
        assert abs(left) < 1e-6 * kn
        assert abs(right) < 1e-6 * kn

    def test_out_of_slab_rejected(self):
        with pytest.raises(DomainError):
            mode_profile(D, PlateConfig(1.0), 1, -0.1)
        with pytest.raises(DomainError):
            mode_profile(D, PlateConfig(1.0), 1, 1.1)


class TestOrthonormality:
    @pytest.mark.parametrize("bc", [D, N])
    @pytest.mark.parametrize("L,n_max", [(1.0, 2), (3.0, 3), (1.0, 20), (0.25, 20)])
    def test_gram_is_identity(self, bc, L, n_max):
        gram = orthonormality_check(bc, PlateConfig(L), n_max, 2048)
        assert np.max(np.abs(gram - np.eye(n_max))) < 1e-10

    def test_mixed_entry_is_zero(self):
        gram = orthonormality_check(D, PlateConfig(1.0), 2, 2048)
        assert abs(gram[0, 1]) < 1e-12

    def test_validation(self):
        with pytest.raises(ValueError):
            orthonormality_check(D, PlateConfig(1.0), 0, 2048)
        with pytest.raises(ValueError):
            orthonormality_check(D, PlateConfig(1.0), 3, 32)
