import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from zernike_uea.basis import (
    DomainError,
    ModeIndex,
    RadialIndex,
    build_radial,
    eval_mode,
    eval_radial,
    integrate_weighted,
    radial_derivative,
    to_real_modes,
)
from zernike_uea.differential import radial_ode_residual

from oracles import gram_schmidt_radial, poly_value


class TestBuildRadial:
    def test_constant(self):
        assert build_radial((0, 0)).power_coefficients() == {0: 1}

    def test_tilt(self):
        assert build_radial((1, 1)).power_coefficients() == {1: 1}

    def test_defocus(self):
        assert build_radial((2, 0)).power_coefficients() == {0: -1, 2: 2}

    @pytest.mark.parametrize("n,m", [(n, m) for n in range(13) for m in range(n % 2, n + 1, 2)])
    def test_matches_gram_schmidt(self, n, m):
        assert build_radial((n, m)).power_coefficients() == gram_schmidt_radial(n, m)

    @pytest.mark.parametrize("n,m", [(3, 1), (8, 4), (12, 0), (15, 15)])
    def test_unit_value_and_lowest_power(self, n, m):
        p = build_radial(RadialIndex(n, m))
        assert sum(p.coeffs) == 1
        assert min(p.power_coefficients()) == m

    @pytest.mark.parametrize("n,m", [(1, 0), (2, 3), (-1, 1), (4, -2)])
    def test_invalid_index(self, n, m):
        with pytest.raises(DomainError):
            build_radial((n, m))


class TestEvalRadial:
    def test_defocus_midpoint(self):
        assert eval_radial(build_radial((2, 0)), 0.5) == pytest.approx(-0.5, abs=1e-15)

    def test_constant(self):
        assert eval_radial(build_radial((0, 0)), 0.3) == 1.0

    @pytest.mark.parametrize("n,m", [(0, 0), (5, 3), (10, 2), (24, 0), (40, 6)])
    def test_value_at_one(self, n, m):
        assert eval_radial(build_radial((n, m)), 1.0) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("r", [-0.01, 1.0001, np.nan])
    def test_outside_unit_interval(self, r):
        with pytest.raises(DomainError):
            eval_radial(build_radial((2, 0)), r)

    def test_array_input(self):
        r = np.linspace(0, 1, 7)
        np.testing.assert_allclose(eval_radial(build_radial((2, 0)), r), 2 * r**2 - 1, atol=1e-15)

    @pytest.mark.parametrize("n,m", [(20, 0), (30, 4), (40, 2)])
    def test_high_degree_against_exact(self, n, m):
        coeffs = build_radial((n, m)).power_coefficients()
        for r in (0.2, 0.55, 0.87, 0.99):
            assert eval_radial(build_radial((n, m)), r) == pytest.approx(poly_value(coeffs, r), abs=1e-13)


class TestModes:
    def test_constant_mode(self):
        assert eval_mode((0, 0), 0.42, 1.3) == 1 + 0j

    def test_v11(self):
        assert eval_mode((1, 1), 0.5, 0.7) == pytest.approx(-math.sqrt(3) * 0.5, abs=1e-14)

    def test_v10(self):
        assert eval_mode(ModeIndex(1, 0), 0.5, math.pi / 2) == pytest.approx(math.sqrt(2) * 0.5j, abs=1e-14)

    def test_theta_is_periodic(self):
        assert eval_mode((3, 1), 0.6, 0.4) == pytest.approx(eval_mode((3, 1), 0.6, 0.4 + 6 * math.pi), abs=1e-13)

    def test_radius_checked(self):
        with pytest.raises(DomainError):
            eval_mode((1, 0), 1.5, 0.0)

    def test_negative_index(self):
        with pytest.raises(DomainError):
            ModeIndex(-1, 0)

    @given(
        st.integers(0, 12),
        st.integers(0, 12),
        st.floats(0, 1),
        st.floats(-10, 10),
    )
    def test_symmetry(self, k, l, r, theta):
        v = eval_mode((k, l), r, theta)
        assert abs(eval_mode((l, k), r, theta) - np.conj(v)) <= 1e-14 * max(1.0, abs(v))
        assert abs(eval_mode((k, l), r, -theta) - np.conj(v)) <= 1e-14 * max(1.0, abs(v))

    @given(st.integers(0, 12), st.integers(0, 12), st.floats(0, 1), st.floats(-10, 10))
    def test_bounded(self, k, l, r, theta):
        assert abs(eval_mode((k, l), r, theta)) <= math.sqrt(k + l + 1) * (1 + 1e-12)


class TestRealModes:
    def test_tilt_at_rim(self):
        assert to_real_modes((1, 0), 1.0, 0.0) == pytest.approx((1.0, 0.0))

    def test_constant(self):
        assert to_real_modes((0, 0), 0.3, 2.0) == pytest.approx((1.0, 0.0))

    def test_tilt_quarter_turn(self):
        even, odd = to_real_modes((1, 0), 0.5, math.pi / 2)
        assert even == pytest.approx(0.0, abs=1e-15)
        assert odd == pytest.approx(0.5)

    @pytest.mark.parametrize("k,l", [(3, 1), (2, 5), (4, 4)])
    def test_consistent_with_complex_mode(self, k, l):
        r, theta = 0.63, 0.9
        even, odd = to_real_modes((k, l), r, theta)
        v = eval_mode((max(k, l), min(k, l)), r, theta) / math.sqrt(k + l + 1)
        assert (even, odd) == pytest.approx((v.real, v.imag), abs=1e-14)


class TestDerivativeAndIntegral:
    def test_derivative_of_r(self):
        assert radial_derivative(build_radial((1, 1))).coeffs == {0: 1}

    def test_derivative_of_defocus(self):
        assert radial_derivative(build_radial((2, 0))).coeffs == {1: 4}

    def test_derivative_of_constant(self):
        assert radial_derivative(build_radial((0, 0))).coeffs == {}

    @pytest.mark.parametrize("m", range(0, 9))
    def test_radial_orthogonality_exact(self, m):
        for n in range(m, 17, 2):
            for n2 in range(m, 17, 2):
                want = Fraction(1, 2 * (n + 1)) if n == n2 else 0
                assert integrate_weighted(build_radial((n, m)), build_radial((n2, m))) == want

    def test_radial_ode(self):
        r = np.linspace(0.1, 0.9, 9)
        worst = max(radial_ode_residual((k, l), r) for k in range(13) for l in range(13))
        assert worst < 1e-9
