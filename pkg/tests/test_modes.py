"""Mode families: frequencies, boundary conditions, spectra, orthonormality."""

import math

import numpy as np
import pytest

from qaccel.errors import DomainError, HorizonError
from qaccel.modes import (
    InertialModeSet,
    build_rindler_modes,
    conformal_spectrum,
    inertial_frequency,
    inertial_inner_product,
    inertial_mode,
    kg_inner_product,
    rindler_boundaries,
    rindler_mode,
    rindler_normalization,
    rindler_spectrum,
)
from qaccel.params import Normalization, PhysicalParams

# closed forms evaluated at 40 digits
OMEGA_1_M02 = 3.147952414044621262631402016930  # sqrt(pi^2 + 0.04)
OMEGA_2_M2 = 6.593816618951230317521178360630  # sqrt(4 pi^2 + 4)
INV_SQRT_PI = 0.564189583547756286948079451561
NU_CONF_LN3 = math.pi / math.log(3.0)


def params(a=1.0, L=1.0, m=0.0, omega=math.pi, n1=0):
    return PhysicalParams(a=a, L=L, m=m, omega=omega, n1=n1)


class TestInertialModes:
    def test_fundamental_massless_frequency(self):
        assert inertial_frequency(1, params()) == pytest.approx(math.pi, rel=1e-15)

    def test_massive_frequencies(self):
        assert inertial_frequency(1, params(m=0.2)) == pytest.approx(OMEGA_1_M02, rel=1e-14)
        assert inertial_frequency(2, params(m=2.0)) == pytest.approx(OMEGA_2_M2, rel=1e-14)

    def test_frequencies_strictly_increase(self):
        ms = InertialModeSet(params(m=0.7), 12)
        assert all(b > a for a, b in zip(ms.frequencies, ms.frequencies[1:]))

    def test_boundary_and_antinode(self):
        p = params()
        assert inertial_mode(1, -0.5, p) == pytest.approx(0.0, abs=1e-12)
        assert inertial_mode(1, 0.5, p) == pytest.approx(0.0, abs=1e-12)
        assert inertial_mode(1, 0.0, p) == pytest.approx(INV_SQRT_PI, rel=1e-14)
        assert inertial_mode(2, 0.0, p) == pytest.approx(0.0, abs=1e-12)

    def test_outside_cavity_rejected(self):
        with pytest.raises(DomainError):
            inertial_mode(1, 0.51, params())

    def test_kg_normalization_amplitude(self):
        p = params(m=2.0)
        val = inertial_mode(1, 0.0, p, Normalization.KLEIN_GORDON)
        expected = 1.0 / math.sqrt(inertial_frequency(1, p) * p.L)
        assert val == pytest.approx(expected, rel=1e-14)

    def test_kg_inner_product_identity_only_for_kg_flag(self):
        p = params(m=2.0)
        kg = InertialModeSet(p, 3, Normalization.KLEIN_GORDON)
        paper = InertialModeSet(p, 3, Normalization.PAPER)
        for k in (1, 2, 3):
            assert inertial_inner_product(kg, k, k) == pytest.approx(1.0, abs=1e-9)
            expected = inertial_frequency(k, p) * p.L / (k * math.pi)
            assert inertial_inner_product(paper, k, k) == pytest.approx(expected, rel=1e-9)
        assert inertial_inner_product(kg, 1, 2) == pytest.approx(0.0, abs=1e-9)

    def test_paper_flag_exact_at_zero_mass(self):
        ms = InertialModeSet(params(m=0.0), 3, Normalization.PAPER)
        for k in (1, 2, 3):
            assert inertial_inner_product(ms, k, k) == pytest.approx(1.0, abs=1e-9)


class TestRindlerBoundaries:
    def test_unit_values(self):
        assert rindler_boundaries(params(a=1.0)) == pytest.approx((1.5, 0.5))

    def test_small_acceleration(self):
        assert rindler_boundaries(params(a=0.1)) == pytest.approx((10.5, 9.5))

    def test_horizon_error(self):
        with pytest.raises(HorizonError):
            rindler_boundaries(params(a=2.0))

    def test_static_rejected(self):
        with pytest.raises(DomainError):
            rindler_boundaries(params(a=0.0))


class TestRindlerSpectrum:
    def test_conformal_limit(self):
        nus = rindler_spectrum(params(m=1e-4), 5)
        for k, nu in enumerate(nus, start=1):
            assert nu == pytest.approx(k * NU_CONF_LN3, rel=1e-3)

    @pytest.mark.parametrize("a,m", [(0.5, 0.2), (1.0, 2.0), (1.5, 0.7), (0.05, 2.0)])
    def test_strictly_increasing(self, a, m):
        nus = rindler_spectrum(params(a=a, m=m), 8)
        assert all(b > a_ for a_, b in zip(nus, nus[1:]))

    def test_mass_raises_every_eigenvalue(self):
        p = params(m=1.5)
        nus = rindler_spectrum(p, 6)
        conf = conformal_spectrum(p, 6)
        assert all(nu > c for nu, c in zip(nus, conf))

    def test_massless_requires_conformal_path(self):
        with pytest.raises(DomainError):
            rindler_spectrum(params(m=0.0), 3)

    def test_small_acceleration_large_orders(self):
        # a*L = 0.02 pushes nu beyond 2000; the scaled bracket must cope
        p = params(a=0.02, m=2.0)
        nus = rindler_spectrum(p, 3)
        assert nus[0] > p.m * rindler_boundaries(p)[1]
        assert all(b > a_ for a_, b in zip(nus, nus[1:]))


class TestRindlerModeSet:
    def test_walls_vanish(self):
        ms = build_rindler_modes(params(m=2.0), 5)
        grid = np.linspace(ms.chi2, ms.chi1, 1501)
        for k in range(1, 6):
            vals = ms.value(k, grid)
            peak = np.max(np.abs(vals))
            assert abs(ms.value(k, ms.chi1)) <= 1e-8 * peak
            assert abs(ms.value(k, ms.chi2)) <= 1e-8 * peak

    def test_interior_node_count(self):
        ms = build_rindler_modes(params(m=2.0), 6)
        grid = np.linspace(ms.chi2, ms.chi1, 4001)[5:-5]
        for k in range(1, 7):
            vals = ms.value(k, grid)
            sign_changes = int(np.sum(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0))
            assert sign_changes == k - 1

    def test_outside_cavity_rejected(self):
        ms = build_rindler_modes(params(m=1.0), 2)
        with pytest.raises(DomainError):
            rindler_mode(ms, 1, ms.chi1 + 0.1)

    def test_normalization_positive_and_consistent(self):
        p = params(m=0.5)
        ms = build_rindler_modes(p, 3)
        n1 = rindler_normalization(p, ms.nu_list[0])
        assert n1 > 0.0
        assert kg_inner_product(ms, 1, 1) == pytest.approx(1.0, abs=1e-6)

    def test_gram_matrix_identity(self):
        ms = build_rindler_modes(params(a=0.5, m=0.2), 8)
        for j in range(1, 9):
            for k in range(j, 9):
                target = 1.0 if j == k else 0.0
                assert kg_inner_product(ms, j, k) == pytest.approx(target, abs=1e-6)

    def test_conformal_limit_orthogonality(self):
        ms = build_rindler_modes(params(m=1e-4), 2)
        assert kg_inner_product(ms, 1, 2) == pytest.approx(0.0, abs=1e-6)

    def test_massless_profile_matches_conformal_sine(self):
        ms = build_rindler_modes(params(m=1e-4), 1)
        grid = np.linspace(ms.chi2, ms.chi1, 201)
        f = ms.value(1, grid)
        sine = np.sin(ms.nu_list[0] * np.log(grid / ms.chi2))
        i_peak = int(np.argmax(np.abs(f)))
        scaled = sine * (f[i_peak] / sine[i_peak])
        assert np.max(np.abs(f - scaled)) <= 1e-3 * np.max(np.abs(f))

    def test_memoized_construction(self):
        p = params(m=0.3)
        assert build_rindler_modes(p, 4) is build_rindler_modes(p, 4)

    def test_exactly_massless_uses_conformal_family(self):
        ms = build_rindler_modes(params(m=0.0), 3)
        assert ms.conformal
        for k, nu in enumerate(ms.nu_list, start=1):
            assert nu == pytest.approx(k * NU_CONF_LN3, rel=1e-12)
        assert kg_inner_product(ms, 1, 1) == pytest.approx(1.0, abs=1e-8)
        assert kg_inner_product(ms, 1, 3) == pytest.approx(0.0, abs=1e-8)
