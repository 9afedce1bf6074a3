"""Radial Zernike polynomials and complex Zernike modes.

Radial polynomials are stored with exact rational coefficients so that
derivatives and integrals can be taken without rounding. Floating point
only enters when a polynomial is evaluated.

A complex mode is labelled by two naturals ``(k, l)`` with ``n = k + l``
and ``m = k - l``::

    V[k, l](r, theta) = sqrt(k + l + 1) * R[n, |m|](r) * exp(1j * m * theta)

Evaluation uses compensated Horner on the power basis. It is accurate to
near machine precision up to ``n`` of about 50; beyond ``n`` of about 60
cancellation wins and results degrade quickly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import numpy as np

__all__ = [
    "DomainError",
    "RadialIndex",
    "ModeIndex",
    "RadialPolynomial",
    "build_radial",
    "eval_radial",
    "eval_mode",
    "to_real_modes",
    "radial_derivative",
    "integrate_weighted",
]


class DomainError(ValueError):
    """Raised for indices or arguments outside the domain of a function."""


@dataclass(frozen=True)
class RadialIndex:
    """Degree ``n`` and azimuthal order ``m`` of a radial polynomial."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise DomainError(f"negative radial index (n={self.n}, m={self.m})")
        if self.m > self.n:
            raise DomainError(f"m={self.m} exceeds n={self.n}")
        if (self.n - self.m) % 2:
            raise DomainError(f"n - m must be even, got n={self.n}, m={self.m}")


@dataclass(frozen=True, order=True)
class ModeIndex:
    """Label ``(k, l)`` of the complex mode ``V[k, l]``."""

    k: int
    l: int  # noqa: E741

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise DomainError(f"mode indices must be natural, got ({self.k}, {self.l})")

    @property
    def n(self) -> int:
        return self.k + self.l

    @property
    def m(self) -> int:
        return self.k - self.l

    @property
    def radial(self) -> RadialIndex:
        return RadialIndex(self.n, abs(self.m))


@dataclass(frozen=True)
class RadialPolynomial:
    """Exact polynomial ``sum_j coeffs[j] * r**(m + 2*j)``.

    Only the powers ``m, m+2, ..., n`` are stored; odd-gap powers are zero.
    """

    index: RadialIndex
    coeffs: tuple[Fraction, ...]

    @property
    def lowest_power(self) -> int:
        return self.index.m

    def power_coefficients(self) -> dict[int, Fraction]:
        """Map ``power -> coefficient`` with zero entries dropped."""
        m = self.index.m
        return {m + 2 * j: c for j, c in enumerate(self.coeffs) if c != 0}

    def __call__(self, r):
        return eval_radial(self, r)


@dataclass(frozen=True)
class PowerPolynomial:
    """Exact polynomial in general power form, ``sum_p coeffs[p] * r**p``.

    Used for derivatives of radial polynomials, which no longer have the
    even-gap structure when ``m`` is reduced below zero.
    """

    coeffs: dict[int, Fraction]

    def derivative(self) -> "PowerPolynomial":
        return PowerPolynomial({p - 1: p * c for p, c in self.coeffs.items() if p > 0 and c != 0})

    def __call__(self, r):
        out = compensated_horner(self.coeffs, r)
        return float(out) if out.ndim == 0 else out

    def exact(self, r: Fraction) -> Fraction:
        return sum((c * r**p for p, c in self.coeffs.items()), Fraction(0))


@lru_cache(maxsize=None)
def _radial_coeffs(n: int, m: int) -> tuple[Fraction, ...]:
    # Explicit sum: R = sum_s (-1)^s (n-s)! / (s! ((n+m)/2-s)! ((n-m)/2-s)!) r^(n-2s)
    half_plus, half_minus = (n + m) // 2, (n - m) // 2
    by_power = {}
    for s in range(half_minus + 1):
        num = (-1) ** s * math.factorial(n - s)
        den = math.factorial(s) * math.factorial(half_plus - s) * math.factorial(half_minus - s)
        by_power[n - 2 * s] = Fraction(num, den)
    return tuple(by_power[p] for p in range(m, n + 1, 2))


def build_radial(index: RadialIndex | tuple[int, int]) -> RadialPolynomial:
    """Build the radial Zernike polynomial ``R[n, m]`` with exact coefficients.

    Parameters
    ----------
    index : RadialIndex or (n, m)
        Degree and azimuthal order, ``0 <= m <= n`` with ``n - m`` even.

    Returns
    -------
    RadialPolynomial
        Coefficients of ``r**m, r**(m+2), ..., r**n``.

    Raises
    ------
    DomainError
        If the index is invalid.
    """
    if not isinstance(index, RadialIndex):
        index = RadialIndex(*index)
    return RadialPolynomial(index, _radial_coeffs(index.n, index.m))


def _check_unit_interval(r: np.ndarray) -> None:
    if np.any(~np.isfinite(r)) or np.any(r < 0.0) or np.any(r > 1.0):
        raise DomainError("radius must lie in [0, 1]")


_SPLITTER = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, al * bl - (((p - ah * bh) - al * bh) - ah * bl)


def compensated_horner(coeffs: dict[int, Fraction], r: np.ndarray) -> np.ndarray:
    """Evaluate ``sum_p coeffs[p] * r**p`` with compensated Horner.

    Rounding errors of each step are carried in a second accumulator, so
    the result is about as accurate as Horner run in twice the working
    precision. Plain Horner on the power basis loses several digits to
    cancellation already for n around 20.
    """
    r = np.asarray(r, dtype=float)
    if not coeffs:
        return np.zeros_like(r)
    top = max(coeffs)
    hi = {p: float(c) for p, c in coeffs.items()}
    lo = {p: float(c - Fraction(hi[p])) for p, c in coeffs.items()}
    s = np.full_like(r, hi[top])
    comp = np.full_like(r, lo[top])
    for p in range(top - 1, -1, -1):
        prod, prod_err = _two_prod(s, r)
        s, sum_err = _two_sum(prod, hi.get(p, 0.0))
        comp = comp * r + (prod_err + sum_err + lo.get(p, 0.0))
    return s + comp


def eval_radial(p: RadialPolynomial, r):
    """Evaluate a radial polynomial at ``r`` in ``[0, 1]`` by Horner's rule.

    Accepts a scalar or an array; returns the same shape.
    """
    arr = np.asarray(r, dtype=float)
    _check_unit_interval(arr)
    out = compensated_horner(p.power_coefficients(), arr)
    return float(out) if out.ndim == 0 else out


def eval_mode(idx: ModeIndex | tuple[int, int], r, theta):
    """Evaluate the complex mode ``V[k, l]`` at polar points.

    ``theta`` is taken modulo ``2*pi``; ``r`` must lie in ``[0, 1]``.
    """
    if not isinstance(idx, ModeIndex):
        idx = ModeIndex(*idx)
    radial = eval_radial(radial_table(idx.n, abs(idx.m)), r)
    theta = np.mod(np.asarray(theta, dtype=float), 2 * np.pi)
    out = math.sqrt(idx.n + 1) * radial * np.exp(1j * idx.m * theta)
    return complex(out) if np.ndim(out) == 0 else out


def to_real_modes(idx: ModeIndex | tuple[int, int], r, theta):
    """Return the real pair ``(R cos(m theta), R sin(m theta))`` with ``m = |k - l|``.

    These are the conventional even and odd real Zernike functions of
    degree ``n = k + l``. They carry no ``sqrt(n + 1)`` factor.
    """
    if not isinstance(idx, ModeIndex):
        idx = ModeIndex(*idx)
    m = abs(idx.m)
    radial = eval_radial(radial_table(idx.n, abs(idx.m)), r)
    theta = np.mod(np.asarray(theta, dtype=float), 2 * np.pi)
    even = radial * np.cos(m * theta)
    odd = radial * np.sin(m * theta)
    if np.ndim(even) == 0:
        return float(even), float(odd)
    return even, odd


def radial_derivative(p: RadialPolynomial | PowerPolynomial) -> PowerPolynomial:
    """Exact termwise derivative ``d/dr``."""
    if isinstance(p, RadialPolynomial):
        p = PowerPolynomial(p.power_coefficients())
    return p.derivative()


def as_power(p: RadialPolynomial) -> PowerPolynomial:
    return PowerPolynomial(p.power_coefficients())


def integrate_weighted(p: RadialPolynomial | PowerPolynomial, q: RadialPolynomial | PowerPolynomial) -> Fraction:
    """Exact value of ``int_0^1 p(r) q(r) r dr``."""
    pc = p.power_coefficients() if isinstance(p, RadialPolynomial) else p.coeffs
    qc = q.power_coefficients() if isinstance(q, RadialPolynomial) else q.coeffs
    total = Fraction(0)
    for a, ca in pc.items():
        for b, cb in qc.items():
            total += ca * cb / (a + b + 2)
    return total


@lru_cache(maxsize=None)
def radial_table(n: int, m: int) -> RadialPolynomial:
    """Cached :func:`build_radial` keyed by plain integers."""
    return build_radial(RadialIndex(n, m))
