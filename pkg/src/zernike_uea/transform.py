"""Analysis and synthesis of disk functions in the complex Zernike basis.

A function is represented by a dense rectangular table of coefficients
``f[k, l]`` for ``0 <= k <= max_k`` and ``0 <= l <= max_l`` such that

    f(r, theta) = sum_{k, l} f[k, l] * V[k, l](r, theta).
"""

from __future__ import annotations

import csv
import math
import os
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .basis import radial_table
from .quadrature import QuadratureGrid, SampledField, inner_product

__all__ = [
    "CoefficientTable",
    "InsufficientGridError",
    "analyze",
    "synthesize",
    "evaluate",
    "parseval_gap",
    "schwartz_norm",
    "truncate_to_tolerance",
    "write_csv",
    "read_csv",
]


class InsufficientGridError(ValueError):
    """The quadrature grid cannot resolve the requested modes."""


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """Dense complex table ``entries[k, l]``.

    Tables of different shapes combine by zero padding, so arithmetic
    behaves like arithmetic of the underlying functions.
    """

    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.ndim != 2 or 0 in entries.shape:
            raise ValueError("coefficient table must be a non-empty 2-D array")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zeros(cls, max_k: int, max_l: int) -> "CoefficientTable":
        return cls(np.zeros((max_k + 1, max_l + 1), dtype=complex))

    @classmethod
    def from_entries(cls, entries: Mapping[tuple[int, int], complex], max_k: int | None = None,
                     max_l: int | None = None) -> "CoefficientTable":
        """Build a table from a sparse ``{(k, l): value}`` mapping."""
        max_k = max([k for k, _ in entries] + [0]) if max_k is None else max_k
        max_l = max([l for _, l in entries] + [0]) if max_l is None else max_l
        table = np.zeros((max_k + 1, max_l + 1), dtype=complex)
        for (k, l), value in entries.items():
            table[k, l] = value
        return cls(table)

    @property
    def max_k(self) -> int:
        return self.entries.shape[0] - 1

    @property
    def max_l(self) -> int:
        return self.entries.shape[1] - 1

    def __getitem__(self, kl: tuple[int, int]) -> complex:
        k, l = kl
        if 0 <= k <= self.max_k and 0 <= l <= self.max_l:
            return complex(self.entries[k, l])
        return 0j

    def padded(self, max_k: int, max_l: int) -> "CoefficientTable":
        """Zero-pad (never crop) to at least ``(max_k, max_l)``."""
        max_k, max_l = max(max_k, self.max_k), max(max_l, self.max_l)
        out = np.zeros((max_k + 1, max_l + 1), dtype=complex)
        out[: self.max_k + 1, : self.max_l + 1] = self.entries
        return CoefficientTable(out)

    def cropped(self, max_k: int, max_l: int) -> "CoefficientTable":
        """Keep only ``k <= max_k`` and ``l <= max_l``."""
        return CoefficientTable(self.padded(max_k, max_l).entries[: max_k + 1, : max_l + 1])

    def _aligned(self, other: "CoefficientTable"):
        mk, ml = max(self.max_k, other.max_k), max(self.max_l, other.max_l)
        return self.padded(mk, ml).entries, other.padded(mk, ml).entries

    def __add__(self, other: "CoefficientTable") -> "CoefficientTable":
        a, b = self._aligned(other)
        return CoefficientTable(a + b)

    def __sub__(self, other: "CoefficientTable") -> "CoefficientTable":
        a, b = self._aligned(other)
        return CoefficientTable(a - b)

    def __mul__(self, scalar) -> "CoefficientTable":
        return CoefficientTable(self.entries * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> "CoefficientTable":
        return CoefficientTable(-self.entries)

    def max_abs_difference(self, other: "CoefficientTable") -> float:
        a, b = self._aligned(other)
        return float(np.max(np.abs(a - b)))

    def energy(self) -> float:
        """Squared l2 norm ``sum |f[k, l]|**2``."""
        return float(np.sum(np.abs(self.entries) ** 2))

    def is_hermitian(self, tol: float = 1e-11) -> bool:
        """True when ``f[l, k] == conj(f[k, l])``, i.e. the function is real."""
        n = max(self.max_k, self.max_l)
        sq = self.padded(n, n).entries
        return bool(np.max(np.abs(sq.T - np.conj(sq))) <= tol)

    def nonzero(self, tol: float = 0.0) -> dict[tuple[int, int], complex]:
        ks, ls = np.nonzero(np.abs(self.entries) > tol)
        return {(int(k), int(l)): complex(self.entries[k, l]) for k, l in zip(ks, ls)}


def _radial_block(max_k: int, max_l: int, r: np.ndarray) -> dict[tuple[int, int], np.ndarray]:
    """``sqrt(n + 1) * R[n, |m|](r)`` for every mode of the rectangle."""
    out = {}
    cache: dict[tuple[int, int], np.ndarray] = {}
    for k in range(max_k + 1):
        for l in range(max_l + 1):
            n, m = k + l, abs(k - l)
            if (n, m) not in cache:
                cache[n, m] = math.sqrt(n + 1) * radial_table(n, m)(r)
            out[k, l] = cache[n, m]
    return out


def analyze(f: SampledField, max_k: int, max_l: int) -> CoefficientTable:
    """Project a sampled field onto ``V[k, l]`` for ``k <= max_k, l <= max_l``.

    Each coefficient is the quadrature inner product ``<f, V[k, l]>``,
    computed through an angular Fourier sum followed by the radial rule.

    Raises
    ------
    InsufficientGridError
        If the grid is not exact for modes of total degree ``max_k + max_l``.
    """
    grid = f.grid
    if grid.max_exact_degree < max_k + max_l:
        raise InsufficientGridError(
            f"grid is exact to degree {grid.max_exact_degree}, need {max_k + max_l}"
        )
    orders = np.arange(-max_l, max_k + 1)
    phases = np.exp(-1j * np.outer(grid.theta, orders))
    fourier = f.values @ phases  # (n_r, n_orders)
    radial = _radial_block(max_k, max_l, grid.radial_nodes)
    weights = grid.radial_weights * (2.0 / grid.n_theta)
    out = np.zeros((max_k + 1, max_l + 1), dtype=complex)
    for (k, l), rad in radial.items():
        out[k, l] = np.dot(weights * rad, fourier[:, k - l + max_l])
    return CoefficientTable(out)


def evaluate(c: CoefficientTable, r, theta) -> np.ndarray:
    """Evaluate ``sum f[k, l] V[k, l]`` at arbitrary points with ``r`` in [0, 1].

    Radial polynomials are evaluated once per distinct radius.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    r, theta = np.broadcast_arrays(r, theta)
    radii, inverse = np.unique(r, return_inverse=True)
    radial = _radial_block(c.max_k, c.max_l, radii)
    by_order: dict[int, np.ndarray] = {}
    for (k, l), rad in radial.items():
        coef = c.entries[k, l]
        if coef != 0:
            by_order[k - l] = by_order.get(k - l, 0) + coef * rad
    out = np.zeros(r.shape, dtype=complex)
    flat_inverse = inverse.reshape(r.shape)
    for m, rad in by_order.items():
        out += rad[flat_inverse] * np.exp(1j * m * theta)
    return out


def synthesize(c: CoefficientTable, grid: QuadratureGrid) -> SampledField:
    """Sample ``sum f[k, l] V[k, l]`` on every point of ``grid``."""
    radial = _radial_block(c.max_k, c.max_l, grid.radial_nodes)
    values = np.zeros(grid.shape, dtype=complex)
    for (k, l), rad in radial.items():
        coef = c.entries[k, l]
        if coef != 0:
            values += np.outer(coef * rad, np.exp(1j * (k - l) * grid.theta))
    return SampledField(grid, values)


def parseval_gap(c: CoefficientTable, f: SampledField) -> float:
    """``| <f, f> - sum |f[k, l]|**2 |`` on the field's grid."""
    return abs(inner_product(f, f).real - c.energy())


def schwartz_norm(c: CoefficientTable) -> float:
    """Weighted energy ``sum (k+1)**2 (l+1)**2 |f[k, l]|**2``.

    Stays bounded as the table grows only when coefficients decay fast,
    which makes it a practical smoothness indicator.
    """
    k = np.arange(c.max_k + 1)[:, None]
    l = np.arange(c.max_l + 1)[None, :]
    return float(np.sum((k + 1) ** 2 * (l + 1) ** 2 * np.abs(c.entries) ** 2))


def truncate_to_tolerance(c: CoefficientTable, eps: float) -> tuple[int, int]:
    """Smallest rectangle ``(k_M, l_M)`` whose tail energy is below ``eps**2`` of the total.

    Among admissible rectangles the one with fewest entries wins; ties go
    to smaller ``k_M + l_M`` and then to smaller ``k_M``.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    power = np.abs(c.entries) ** 2
    total = power.sum()
    if total == 0:
        return (0, 0)
    # suffix[a, b] = sum of power[k, l] for k >= a and l >= b
    suffix = np.zeros((power.shape[0] + 1, power.shape[1] + 1))
    suffix[:-1, :-1] = power[::-1, ::-1].cumsum(0).cumsum(1)[::-1, ::-1]
    budget = eps**2 * total
    best = None
    for km in range(c.max_k + 1):
        for lm in range(c.max_l + 1):
            tail = suffix[km + 1, 0] + suffix[0, lm + 1] - suffix[km + 1, lm + 1]
            if tail <= budget:
                key = ((km + 1) * (lm + 1), km + lm, km)
                if best is None or key < best:
                    best = key
                break  # larger lm only grows the rectangle
    return (best[2], best[1] - best[2])


def write_csv(c: CoefficientTable, path) -> None:
    """Write ``k,l,re,im`` rows in row-major order with 17 significant digits.

    ``path`` may also be an open text stream.
    """
    if hasattr(path, "write"):
        _write_rows(c, path)
        return
    with open(path, "w", newline="") as fh:
        _write_rows(c, fh)


def _write_rows(c: CoefficientTable, fh) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["k", "l", "re", "im"])
    for k in range(c.max_k + 1):
        for l in range(c.max_l + 1):
            v = c.entries[k, l]
            writer.writerow([k, l, f"{v.real:.17g}", f"{v.imag:.17g}"])


def read_csv(path: str | os.PathLike) -> CoefficientTable:
    """Read a table written by :func:`write_csv`."""
    rows = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or [h.strip() for h in reader.fieldnames] != ["k", "l", "re", "im"]:
            raise ValueError(f"{path}: expected header 'k,l,re,im'")
        for row in reader:
            k, l = int(row["k"]), int(row["l"])
            if k < 0 or l < 0:
                raise ValueError(f"{path}: negative mode index ({k}, {l})")
            rows[k, l] = complex(float(row["re"]), float(row["im"]))
    if not rows:
        raise ValueError(f"{path}: no coefficients")
    return CoefficientTable.from_entries(rows)
