import cmath
import math

import numpy as np
import pytest

from zernike_uea.basis import DomainError, eval_mode
from zernike_uea.differential import (
    LADDER_FORMS,
    algebraic_image,
    apply_ladder_differential,
    mode_derivatives,
    radial_ode_residual,
    verify_dr2_identity,
)
from zernike_uea.ladder import Generator

POINTS = np.array([(r, t) for r in np.linspace(0.1, 0.9, 5) for t in np.linspace(0.0, 2 * np.pi, 8, endpoint=False)])


def test_a_plus_on_vacuum():
    value = apply_ladder_differential("A+", (0, 0), [(0.5, 0.7)])[0]
    assert value == pytest.approx(math.sqrt(2) * 0.5 * cmath.exp(0.7j), abs=1e-14)
    assert value == pytest.approx(eval_mode((1, 0), 0.5, 0.7), abs=1e-14)


def test_b_plus_on_vacuum():
    value = apply_ladder_differential("B+", (0, 0), [(0.5, 0.7)])[0]
    assert value == pytest.approx(math.sqrt(2) * 0.5 * cmath.exp(-0.7j), abs=1e-14)
    assert value == pytest.approx(eval_mode((0, 1), 0.5, 0.7), abs=1e-14)


@pytest.mark.parametrize("l", [0, 1, 4])
def test_a_minus_annihilates_k0(l):
    assert np.max(np.abs(apply_ladder_differential("A-", (0, l), POINTS))) < 1e-12


def test_origin_allowed_for_diagonal_modes():
    value = apply_ladder_differential("A+", (2, 2), [(0.0, 0.3)])
    assert np.isfinite(value).all()
    assert value[0] == pytest.approx(algebraic_image("A+", (2, 2), [(0.0, 0.3)])[0], abs=1e-12)


def test_origin_rejected_off_diagonal():
    with pytest.raises(DomainError):
        apply_ladder_differential("A+", (2, 1), [(0.0, 0.3)])


def test_diagonal_generators_have_no_form():
    with pytest.raises(ValueError):
        apply_ladder_differential(Generator.A3, (1, 1), POINTS)


@pytest.mark.parametrize("g", list(LADDER_FORMS))
def test_equivalence_with_recurrences(g):
    worst = 0.0
    for k in range(11):
        for l in range(11):
            diff = apply_ladder_differential(g, (k, l), POINTS) - algebraic_image(g, (k, l), POINTS)
            worst = max(worst, np.max(np.abs(diff)))
    assert worst < 1e-9


def test_forms_reproduce_displays():
    # substituting eigenvalues: raising forms carry sqrt((k+l+2)/(k+l+1)), lowering sqrt((k+l)/(k+l+1))
    assert LADDER_FORMS[Generator.A_PLUS].factor(1, 2) == pytest.approx(math.sqrt(5 / 4))
    assert LADDER_FORMS[Generator.B_MINUS].factor(1, 2) == pytest.approx(math.sqrt(3 / 4))
    assert LADDER_FORMS[Generator.A_MINUS].factor(0, 0) == 0.0


class TestDR2:
    def test_one_one(self):
        assert verify_dr2_identity((1, 1), [(0.3, 0.2), (0.7, 1.1)]) < 1e-10

    def test_constant_mode_exact(self):
        assert verify_dr2_identity((0, 0), POINTS) == 0.0

    def test_three_one(self):
        assert verify_dr2_identity((3, 1), [(0.5, 0.0)]) < 1e-10

    def test_all_small_modes(self):
        assert max(verify_dr2_identity((k, l), POINTS) for k in range(11) for l in range(11)) < 1e-9

    def test_rim_rejected(self):
        with pytest.raises(DomainError):
            verify_dr2_identity((1, 1), [(1.0, 0.0)])

    def test_matches_radial_ode(self):
        # on a single mode the operator identity is the radial equation divided by (1 - r^2)
        r = np.linspace(0.1, 0.9, 9)
        for k, l in [(2, 0), (4, 3), (6, 6)]:
            bundle = mode_derivatives((k, l))
            scale = bundle.norm / np.min(1 - r**2)
            assert verify_dr2_identity((k, l), np.column_stack([r, np.zeros_like(r)])) <= scale * radial_ode_residual((k, l), r) + 1e-10
