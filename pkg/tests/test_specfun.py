"""Special-function kernel against frozen arbitrary-precision golden values.

The reference numbers were produced by scripts/make_specfun_table.py (mpmath,
40 digits) before the kernel was written; the kernel must reproduce them from
its own Lanczos + power-series machinery.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaccel._oracle_data import BESSEL_I_IMAG_ORDER, COMPLEX_GAMMA
from qaccel.errors import DomainError, GammaPoleError, NonFiniteError
from qaccel.specfun import (
    bessel_I_imag_order,
    bessel_I_imag_order_scaled,
    complex_gamma,
    gamma_order_weight,
    rindler_bracket,
    rindler_bracket_scaled,
)

# mpmath 40-digit references, frozen
GAMMA_1_PLUS_I = complex(0.498015668118356042713691117462, -0.154949828301810685124955130484)
I0_AT_1 = 1.266065877752008335598244625215
I_2I_AT_1 = complex(-0.307602404148837227537427362585, -6.870651884686908569838958664790)
NU1_CONFORMAL_LN3 = 2.859600867380127269652140420334  # pi / ln 3


class TestComplexGamma:
    def test_gamma_one(self):
        assert complex_gamma(1 + 0j) == pytest.approx(1.0 + 0j, abs=1e-14)

    def test_gamma_five_is_factorial(self):
        assert complex_gamma(5 + 0j) == pytest.approx(24.0 + 0j, rel=1e-13)

    def test_gamma_one_plus_i(self):
        val = complex_gamma(1 + 1j)
        assert abs(val - GAMMA_1_PLUS_I) / abs(GAMMA_1_PLUS_I) < 1e-12

    @pytest.mark.parametrize("re,im,ref_re,ref_im", COMPLEX_GAMMA)
    def test_frozen_table(self, re, im, ref_re, ref_im):
        ref = complex(ref_re, ref_im)
        val = complex_gamma(complex(re, im))
        assert abs(val - ref) / abs(ref) < 1e-12

    @pytest.mark.parametrize("z", [0.0, -1.0, -2.0, -7 + 1e-15j])
    def test_pole_error(self, z):
        with pytest.raises(GammaPoleError):
            complex_gamma(z)

    def test_reflection_region(self):
        # functional equation Gamma(z+1) = z Gamma(z) across the reflection cut
        z = -2.3 + 0.7j
        assert complex_gamma(z + 1) == pytest.approx(z * complex_gamma(z), rel=1e-12)


class TestBesselImagOrder:
    def test_order_zero_is_real_I0(self):
        val = bessel_I_imag_order(0.0, 1.0)
        assert val.real == pytest.approx(I0_AT_1, rel=1e-12)
        assert abs(val.imag) < 1e-14

    def test_nu2_z1_thirty_digit_oracle(self):
        val = bessel_I_imag_order(2.0, 1.0)
        assert abs(val - I_2I_AT_1) / abs(I_2I_AT_1) < 1e-12

    @pytest.mark.parametrize("nu,z,ref_re,ref_im", BESSEL_I_IMAG_ORDER)
    def test_frozen_oracle_grid(self, nu, z, ref_re, ref_im):
        ref = complex(ref_re, ref_im)
        val = bessel_I_imag_order(nu, z)
        assert abs(val - ref) / abs(ref) < 1e-10

    @pytest.mark.parametrize("z", [0.0, -1.0])
    def test_nonpositive_argument_rejected(self, z):
        with pytest.raises(DomainError):
            bessel_I_imag_order(1.0, z)

    def test_unscaled_overflows_cleanly_at_large_order(self):
        # 1/Gamma(1 + 600i) exceeds double range; the scaled variant survives
        with pytest.raises(NonFiniteError):
            bessel_I_imag_order(600.0, 1.0)
        val = bessel_I_imag_order_scaled(600.0, 1.0)
        assert np.isfinite(val.real) and np.isfinite(val.imag)

    @settings(max_examples=60, deadline=None)
    @given(
        nu=st.floats(min_value=0.0, max_value=50.0),
        z=st.floats(min_value=1e-3, max_value=20.0),
    )
    def test_conjugation_identity(self, nu, z):
        plus = bessel_I_imag_order(nu, z)
        minus = bessel_I_imag_order(-nu, z)
        assert abs(minus - plus.conjugate()) <= 1e-12 * abs(plus)

    def test_scaled_matches_unscaled_through_gamma(self):
        nu, z = 7.5, 3.0
        scaled = bessel_I_imag_order_scaled(nu, z)
        unscaled = bessel_I_imag_order(nu, z)
        assert scaled == pytest.approx(unscaled * complex_gamma(1 + 1j * nu), rel=1e-12)

    def test_array_argument(self):
        zs = np.array([0.5, 1.0, 2.0])
        vals = bessel_I_imag_order_scaled(1.5, zs)
        for z, v in zip(zs, vals):
            assert complex(v) == pytest.approx(bessel_I_imag_order_scaled(1.5, float(z)))


class TestRindlerBracket:
    def test_zero_at_reference_point(self):
        assert rindler_bracket(2.0, 1.0, 1.5, 1.5) == 0.0

    @settings(max_examples=40, deadline=None)
    @given(
        nu=st.floats(min_value=0.1, max_value=20.0),
        m=st.floats(min_value=1e-3, max_value=3.0),
        chi_a=st.floats(min_value=0.1, max_value=5.0),
        chi_b=st.floats(min_value=0.1, max_value=5.0),
    )
    def test_antisymmetry(self, nu, m, chi_a, chi_b):
        fwd = rindler_bracket(nu, m, chi_a, chi_b)
        rev = rindler_bracket(nu, m, chi_b, chi_a)
        scale = max(abs(fwd), abs(rev), 1e-300)
        assert abs(fwd + rev) <= 1e-12 * scale

    def test_returns_real_float(self):
        assert isinstance(rindler_bracket(3.0, 0.5, 1.5, 0.7), float)

    def test_massless_limit_vanishes_at_opposite_wall(self):
        # at m -> 0 the conformal eigenvalue pi/ln 3 must nearly zero the
        # bracket at the far end of a (0.5, 1.5) cavity
        grid = np.linspace(0.5, 1.5, 1001)
        vals = rindler_bracket_scaled(NU1_CONFORMAL_LN3, 1e-4, 1.5, grid)
        assert abs(vals[0]) < 1e-6 * np.max(np.abs(vals))

    def test_scaled_ratio_is_gamma_weight(self):
        nu, m = 4.2, 0.8
        plain = rindler_bracket(nu, m, 1.5, 0.9)
        scaled = rindler_bracket_scaled(nu, m, 1.5, 0.9)
        assert scaled == pytest.approx(plain * gamma_order_weight(nu), rel=1e-10)


def test_gamma_order_weight_closed_form():
    for nu in [0.5, 2.0, 10.0]:
        expected = abs(complex_gamma(1 + 1j * nu)) ** 2
        assert gamma_order_weight(nu) == pytest.approx(expected, rel=1e-12)
    assert gamma_order_weight(0.0) == 1.0
