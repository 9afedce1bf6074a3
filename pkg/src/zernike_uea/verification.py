"""Numerical invariant suite run by ``zernike-uea verify``."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .basis import integrate_weighted, radial_table
from .differential import LADDER_FORMS, algebraic_image, apply_ladder_differential, radial_ode_residual, verify_dr2_identity
from .ladder import Generator, OperatorExpr, apply_generator, casimir, commutator_defect
from .quadrature import build_grid, inner_product
from .transform import CoefficientTable, analyze, parseval_gap, synthesize

__all__ = ["CheckResult", "run_checks", "CHECKS"]


@dataclass
class CheckResult:
    name: str
    value: float
    tolerance: float
    seconds: float

    @property
    def passed(self) -> bool:
        return bool(self.value <= self.tolerance)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status}  {self.name:<34} {self.value:.3e} <= {self.tolerance:.0e}  ({self.seconds:.2f}s)"


def _random_tables(count: int, max_index: int, seed: int):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        shape = (int(rng.integers(1, max_index + 2)), int(rng.integers(1, max_index + 2)))
        yield CoefficientTable(rng.normal(size=shape) + 1j * rng.normal(size=shape))


def _interior_points(n_r: int = 5, n_theta: int = 8) -> np.ndarray:
    r = np.linspace(0.1, 0.9, n_r)
    theta = 2 * np.pi * np.arange(n_theta) / n_theta + 0.1
    return np.array([(a, b) for a in r for b in theta])


def check_orthonormality(n: int) -> float:
    grid = build_grid(n)
    modes = [(k, d - k) for d in range(n + 1) for k in range(d + 1)]
    fields = [synthesize(CoefficientTable.from_entries({m: 1}), grid) for m in modes]
    gram = np.array([[inner_product(a, b) for b in fields] for a in fields])
    return float(np.max(np.abs(gram - np.eye(len(modes)))))


def check_radial_orthogonality(n: int) -> float:
    for m in range(n + 1):
        degrees = range(m, n + 1, 2)
        for a in degrees:
            for b in degrees:
                want = Fraction(1, 2 * (a + 1)) if a == b else Fraction(0)
                if integrate_weighted(radial_table(a, m), radial_table(b, m)) != want:
                    return 1.0
    return 0.0


def check_radial_ode(n: int) -> float:
    r = np.linspace(0.02, 0.98, 40)
    return max(radial_ode_residual((k, l), r) for k in range(n + 1) for l in range(n + 1))


def check_recurrences(n: int) -> float:
    worst = 0.0
    expected = {
        Generator.A_PLUS: lambda k, l: ((k + 1, l), k + 1),
        Generator.A_MINUS: lambda k, l: ((k - 1, l), k),
        Generator.B_PLUS: lambda k, l: ((k, l + 1), l + 1),
        Generator.B_MINUS: lambda k, l: ((k, l - 1), l),
    }
    for k in range(n + 1):
        for l in range(n + 1):
            basis = CoefficientTable.from_entries({(k, l): 1}, n, n)
            for g, rule in expected.items():
                (tk, tl), factor = rule(k, l)
                want = CoefficientTable.from_entries({(tk, tl): factor} if tk >= 0 and tl >= 0 else {}, n + 1, n + 1)
                worst = max(worst, apply_generator(g, basis).max_abs_difference(want))
    return worst


def check_commutators(n: int, count: int = 100) -> float:
    G = Generator
    gen = OperatorExpr.generator
    relations = [
        (G.A_PLUS, G.A_MINUS, gen(G.A3, -2)),
        (G.A3, G.A_PLUS, gen(G.A_PLUS)),
        (G.A3, G.A_MINUS, gen(G.A_MINUS, -1)),
        (G.K, G.A_PLUS, gen(G.A_PLUS)),
        (G.K, G.A_MINUS, gen(G.A_MINUS, -1)),
        (G.B_PLUS, G.B_MINUS, gen(G.B3, -2)),
        (G.B3, G.B_PLUS, gen(G.B_PLUS)),
        (G.B3, G.B_MINUS, gen(G.B_MINUS, -1)),
        (G.L, G.B_PLUS, gen(G.B_PLUS)),
        (G.L, G.B_MINUS, gen(G.B_MINUS, -1)),
    ]
    for a in (G.A_PLUS, G.A3, G.A_MINUS):
        for b in (G.B_PLUS, G.B3, G.B_MINUS):
            relations.append((a, b, OperatorExpr()))
    worst = 0.0
    for table in _random_tables(count, n, seed=1):
        for g1, g2, want in relations:
            worst = max(worst, commutator_defect(g1, g2, table, want))
    return worst


def check_casimir(n: int, count: int = 100) -> float:
    worst = 0.0
    for table in _random_tables(count, n, seed=2):
        for family in "AB":
            worst = max(worst, casimir(family, table).max_abs_difference(0.25 * table))
    return worst


def check_differential(n: int) -> float:
    pts = _interior_points()
    worst = 0.0
    for k in range(n + 1):
        for l in range(n + 1):
            for g in LADDER_FORMS:
                diff = apply_ladder_differential(g, (k, l), pts) - algebraic_image(g, (k, l), pts)
                worst = max(worst, float(np.max(np.abs(diff))))
    return worst


def check_dr2_identity(n: int) -> float:
    pts = _interior_points()
    return max(verify_dr2_identity((k, l), pts) for k in range(n + 1) for l in range(n + 1))


def check_parseval(n: int) -> float:
    half = max(1, n // 2)
    grid = build_grid(2 * half)
    worst = 0.0
    for table in _random_tables(10, half, seed=3):
        f = synthesize(table, grid)
        worst = max(worst, parseval_gap(analyze(f, 2 * half - table.max_l, table.max_l), f))
    return worst


def check_round_trip(n: int) -> float:
    half = max(1, n // 2)
    grid = build_grid(2 * half)
    worst = 0.0
    for table in _random_tables(10, half, seed=4):
        back = analyze(synthesize(table, grid), table.max_k, table.max_l)
        worst = max(worst, back.max_abs_difference(table))
    return worst


# name -> (check, default tolerance, index cap)
CHECKS: dict[str, tuple[Callable[[int], float], float, int]] = {
    "orthonormality": (check_orthonormality, 1e-10, 16),
    "radial orthogonality (exact)": (check_radial_orthogonality, 0.0, 16),
    "radial ODE residual": (check_radial_ode, 1e-9, 12),
    "ladder recurrences": (check_recurrences, 1e-13, 16),
    "commutation relations": (check_commutators, 1e-12, 10),
    "Casimir = 1/4": (check_casimir, 1e-13, 10),
    "differential = algebraic ladder": (check_differential, 1e-9, 10),
    "D_R^2 first-order identity": (check_dr2_identity, 1e-9, 10),
    "Parseval gap": (check_parseval, 1e-10, 16),
    "analyze/synthesize round trip": (check_round_trip, 1e-10, 16),
}


def run_checks(max_index: int = 10, tol: float | None = None) -> list[CheckResult]:
    """Run every check with indices up to ``min(max_index, cap)``.

    ``tol`` replaces every default tolerance except the exact rational one.
    """
    results = []
    for name, (check, default_tol, cap) in CHECKS.items():
        start = time.perf_counter()
        value = check(min(max_index, cap))
        tolerance = default_tol if tol is None or default_tol == 0.0 else tol
        results.append(CheckResult(name, value if math.isfinite(value) else math.inf, tolerance,
                                   time.perf_counter() - start))
    return results
