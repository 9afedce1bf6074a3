"""Polar quadrature on the unit disk.

The inner product used throughout the package is

    <f, g> = (1/pi) * int_0^{2 pi} dtheta int_0^1 dr  r f(r, theta) conj(g(r, theta))

under which the complex Zernike modes are orthonormal. Radially it is
realized with Gauss-Legendre nodes mapped to ``[0, 1]`` (the measure
factor ``r`` is folded into the weights), and in angle with the
trapezoid rule on uniform nodes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = ["QuadratureGrid", "SampledField", "GridMismatchError", "build_grid", "inner_product", "sample"]


class GridMismatchError(ValueError):
    """Two fields sampled on different grids were combined."""


@dataclass(frozen=True, eq=False)
class QuadratureGrid:
    """Tensor product of radial Gauss nodes and uniform angles.

    Attributes
    ----------
    radial_nodes : ndarray
        Nodes in ``(0, 1)``, increasing.
    radial_weights : ndarray
        Positive weights including the factor ``r``; they sum to 1/2.
    n_theta : int
        Number of angles ``theta_j = 2 pi j / n_theta``.
    max_exact_degree : int
        Products ``f * conj(g)`` of two polynomials of total degree up to
        this value are integrated exactly.
    """

    radial_nodes: np.ndarray
    radial_weights: np.ndarray
    n_theta: int
    max_exact_degree: int
    theta: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        for name in ("radial_nodes", "radial_weights"):
            arr = np.array(getattr(self, name), dtype=float)
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)
        theta = 2 * np.pi * np.arange(self.n_theta) / self.n_theta
        theta.setflags(write=False)
        object.__setattr__(self, "theta", theta)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.radial_nodes.size, self.n_theta)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        """Return ``(r, theta)`` arrays of shape :attr:`shape`."""
        return np.meshgrid(self.radial_nodes, self.theta, indexing="ij")

    def same_as(self, other: "QuadratureGrid") -> bool:
        return other is self or (
            self.n_theta == other.n_theta
            and np.array_equal(self.radial_nodes, other.radial_nodes)
            and np.array_equal(self.radial_weights, other.radial_weights)
        )


@dataclass(frozen=True, eq=False)
class SampledField:
    """Complex values of a function at every ``(radial node, angle)`` pair."""

    grid: QuadratureGrid
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=complex)
        if values.shape != self.grid.shape:
            raise ValueError(f"expected values of shape {self.grid.shape}, got {values.shape}")
        object.__setattr__(self, "values", values)

    def _check(self, other: "SampledField") -> None:
        if not self.grid.same_as(other.grid):
            raise GridMismatchError("fields live on different quadrature grids")

    def __add__(self, other: "SampledField") -> "SampledField":
        self._check(other)
        return SampledField(self.grid, self.values + other.values)

    def __sub__(self, other: "SampledField") -> "SampledField":
        self._check(other)
        return SampledField(self.grid, self.values - other.values)

    def __mul__(self, scalar) -> "SampledField":
        return SampledField(self.grid, self.values * scalar)

    __rmul__ = __mul__


def build_grid(max_degree: int, n_radial: int | None = None) -> QuadratureGrid:
    """Build a grid that integrates in-band products exactly.

    Parameters
    ----------
    max_degree : int
        Largest total degree ``k + l`` of the modes to be paired.
    n_radial : int, optional
        Override for the number of radial nodes; at least ``max_degree + 2``.

    Returns
    -------
    QuadratureGrid
    """
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    n_r = max_degree + 2 if n_radial is None else n_radial
    if n_r < max_degree + 2:
        raise ValueError(f"need at least {max_degree + 2} radial nodes, got {n_r}")
    x, w = np.polynomial.legendre.leggauss(n_r)
    nodes = 0.5 * (x + 1.0)
    weights = 0.5 * w * nodes
    return QuadratureGrid(nodes, weights, 2 * max_degree + 3, max_degree)


def sample(func, grid: QuadratureGrid) -> SampledField:
    """Sample ``func(r, theta)`` (vectorized) on every grid point."""
    r, theta = grid.mesh()
    return SampledField(grid, np.broadcast_to(func(r, theta), grid.shape))


def inner_product(f: SampledField, g: SampledField) -> complex:
    """Quadrature value of ``(1/pi) * int int f conj(g) r dr dtheta``."""
    f._check(g)
    grid = f.grid
    per_radius = (f.values * np.conj(g.values)).sum(axis=1)
    # (1/pi) * (2 pi / n_theta)
    return complex(2.0 / grid.n_theta * np.dot(grid.radial_weights, per_radius))
