"""First-order differential realizations of the ladder operators.

Each of ``A+, A-, B+, B-`` can be written through the multiplication
operator ``R``, the radial derivative ``D_R``, the phase ``exp(+-i Theta)``
and the diagonal ``K, L``:

    X = exp(s i Theta)/2 [d (1 - R^2) D_R + R (K + L + c) + e (K - L) / R]
        * sqrt((K + L + c) / (K + L + 1))

with ``(s, d, c, e)`` equal to ``(+1, -1, 2, +1)`` for ``A+``,
``(-1, +1, 0, +1)`` for ``A-``, ``(-1, -1, 2, -1)`` for ``B+`` and
``(+1, +1, 0, -1)`` for ``B-``. On a single mode ``K`` and ``L`` are
replaced by their eigenvalues. All derivatives come from exact
polynomial coefficients, so these evaluations serve as an independent
check of the algebraic recurrences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import DomainError, ModeIndex, PowerPolynomial, as_power, radial_table
from .ladder import Generator

__all__ = [
    "DifferentialLadderForm",
    "ModeDerivativeBundle",
    "LADDER_FORMS",
    "mode_derivatives",
    "apply_ladder_differential",
    "algebraic_image",
    "verify_dr2_identity",
    "radial_ode_residual",
]


@dataclass(frozen=True)
class DifferentialLadderForm:
    """Sign and shift pattern of one ladder operator's differential form."""

    generator: Generator
    phase_sign: int
    derivative_sign: int
    shift: int
    inverse_r_sign: int

    def factor(self, k: int, l: int) -> float:
        """Square-root factor ``sqrt((k + l + c) / (k + l + 1))``."""
        return math.sqrt((k + l + self.shift) / (k + l + 1))


LADDER_FORMS = {
    Generator.A_PLUS: DifferentialLadderForm(Generator.A_PLUS, +1, -1, 2, +1),
    Generator.A_MINUS: DifferentialLadderForm(Generator.A_MINUS, -1, +1, 0, +1),
    Generator.B_PLUS: DifferentialLadderForm(Generator.B_PLUS, -1, -1, 2, -1),
    Generator.B_MINUS: DifferentialLadderForm(Generator.B_MINUS, +1, +1, 0, -1),
}


@dataclass(frozen=True)
class ModeDerivativeBundle:
    """Exact radial factor of ``V[k, l]`` and its first two derivatives."""

    index: ModeIndex
    radial: PowerPolynomial
    first: PowerPolynomial
    second: PowerPolynomial

    @property
    def norm(self) -> float:
        return math.sqrt(self.index.n + 1)

    def phase(self, theta) -> np.ndarray:
        return np.exp(1j * self.index.m * np.asarray(theta, dtype=float))


def mode_derivatives(idx: ModeIndex | tuple[int, int]) -> ModeDerivativeBundle:
    if not isinstance(idx, ModeIndex):
        idx = ModeIndex(*idx)
    radial = as_power(radial_table(idx.n, abs(idx.m)))
    first = radial.derivative()
    return ModeDerivativeBundle(idx, radial, first, first.derivative())


def _points(points):
    pts = np.asarray(points, dtype=float).reshape(-1, 2)
    return pts[:, 0], pts[:, 1]


def apply_ladder_differential(g: Generator | str, idx: ModeIndex | tuple[int, int], points) -> np.ndarray:
    """Apply the differential form of ``g`` to ``V[k, l]`` at ``(r, theta)`` points.

    Parameters
    ----------
    g : Generator
        One of ``A+, A-, B+, B-``.
    idx : ModeIndex
    points : array_like of shape (N, 2)
        Polar points with ``0 < r < 1``; ``r = 0`` is accepted only when
        ``k == l``, where the ``1/r`` term vanishes.

    Returns
    -------
    ndarray of complex, shape (N,)
    """
    g = Generator(g)
    if g not in LADDER_FORMS:
        raise ValueError(f"{g} has no first-order differential form")
    form = LADDER_FORMS[g]
    bundle = mode_derivatives(idx)
    k, l = bundle.index.k, bundle.index.l
    r, theta = _points(points)
    if np.any(r < 0) or np.any(r >= 1):
        raise DomainError("points must satisfy 0 <= r < 1")
    at_origin = r == 0
    if np.any(at_origin) and k != l:
        raise DomainError("r = 0 is singular for modes with k != l")

    value = bundle.norm * bundle.radial(r)
    slope = bundle.norm * bundle.first(r)
    safe_r = np.where(at_origin, 1.0, r)
    inverse_term = np.where(at_origin, 0.0, form.inverse_r_sign * (k - l) * value / safe_r)
    bracket = form.derivative_sign * (1 - r**2) * slope + r * (k + l + form.shift) * value + inverse_term
    phase = np.exp(1j * (form.phase_sign + k - l) * theta)
    return 0.5 * phase * bracket * form.factor(k, l)


_ALGEBRAIC_SHIFT = {
    Generator.A_PLUS: (1, 0),
    Generator.A_MINUS: (-1, 0),
    Generator.B_PLUS: (0, 1),
    Generator.B_MINUS: (0, -1),
}


def algebraic_image(g: Generator | str, idx: ModeIndex | tuple[int, int], points) -> np.ndarray:
    """Pointwise value of the recurrence image, e.g. ``(k + 1) V[k+1, l]`` for ``A+``."""
    g = Generator(g)
    if not isinstance(idx, ModeIndex):
        idx = ModeIndex(*idx)
    r, theta = _points(points)
    dk, dl = _ALGEBRAIC_SHIFT[g]
    k, l = idx.k + dk, idx.l + dl
    scale = {Generator.A_PLUS: idx.k + 1, Generator.A_MINUS: idx.k,
             Generator.B_PLUS: idx.l + 1, Generator.B_MINUS: idx.l}[g]
    if k < 0 or l < 0:
        return np.zeros(r.shape, dtype=complex)
    target = mode_derivatives((k, l))
    return scale * target.norm * target.radial(r) * target.phase(theta)


def verify_dr2_identity(idx: ModeIndex | tuple[int, int], points) -> float:
    """Largest ``|D_R^2 V - RHS V|`` where RHS is the first-order form of ``D_R^2``.

    The right-hand side is

        1/(1 - R^2) [(3R - 1/R) D_R - (K + L)(K + L + 2) + (K - L)^2 / R^2]

    Points with ``r = 1`` (or ``r = 0``) are rejected.
    """
    bundle = mode_derivatives(idx)
    k, l = bundle.index.k, bundle.index.l
    r, theta = _points(points)
    if np.any(r <= 0) or np.any(r >= 1):
        raise DomainError("points must satisfy 0 < r < 1")
    phase = bundle.phase(theta)
    value = bundle.norm * bundle.radial(r) * phase
    slope = bundle.norm * bundle.first(r) * phase
    curvature = bundle.norm * bundle.second(r) * phase
    rhs = ((3 * r - 1 / r) * slope - (k + l) * (k + l + 2) * value + (k - l) ** 2 / r**2 * value) / (1 - r**2)
    return float(np.max(np.abs(curvature - rhs), initial=0.0))


def radial_ode_residual(idx: ModeIndex | tuple[int, int], r) -> float:
    """Largest residual of the second-order radial equation for ``R[n, |m|]``.

    Evaluates ``(1 - r^2) R'' - (3r - 1/r) R' + n(n+2) R - m^2 R / r^2``.
    """
    bundle = mode_derivatives(idx)
    n, m = bundle.index.n, bundle.index.m
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0) or np.any(r > 1):
        raise DomainError("radius must satisfy 0 < r <= 1")
    res = ((1 - r**2) * bundle.second(r) - (3 * r - 1 / r) * bundle.first(r)
           + n * (n + 2) * bundle.radial(r) - m * m * bundle.radial(r) / r**2)
    return float(np.max(np.abs(res), initial=0.0))
