"""Ladder operators of su(1,1) + su(1,1) acting on coefficient tables.

On basis functions the raising and lowering operators act as

    A+ V[k, l] = (k + 1) V[k+1, l]        B+ V[k, l] = (l + 1) V[k, l+1]
    A- V[k, l] = k V[k-1, l]              B- V[k, l] = l V[k, l-1]

with ``A3 = K + 1/2`` and ``B3 = L + 1/2`` diagonal (``K V = k V``,
``L V = l V``). For ``f = sum f[k, l] V[k, l]`` this transports to the
coefficient table ``g`` of the image function as

    (A+ f)[k, l] = k f[k-1, l]            (A- f)[k, l] = (k + 1) f[k+1, l]

and symmetrically in ``l`` for the B family. Raising operators grow the
table by one row or column; lowering never shrinks it.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .transform import CoefficientTable

__all__ = [
    "Generator",
    "UEAMonomial",
    "OperatorExpr",
    "apply_generator",
    "apply_monomial",
    "apply_operator",
    "casimir",
    "commutator",
    "commutator_defect",
]


class Generator(enum.Enum):
    A_PLUS = "A+"
    A_MINUS = "A-"
    A3 = "A3"
    B_PLUS = "B+"
    B_MINUS = "B-"
    B3 = "B3"
    K = "K"
    L = "L"

    def __str__(self) -> str:
        return self.value


# Ordered word A+^a1 A3^a2 A-^a3 B+^b1 B3^b2 B-^b3, as position -> generator.
ORDERED_WORD = (
    Generator.A_PLUS,
    Generator.A3,
    Generator.A_MINUS,
    Generator.B_PLUS,
    Generator.B3,
    Generator.B_MINUS,
)


@dataclass(frozen=True)
class UEAMonomial:
    """``coefficient * A+^a1 A3^a2 A-^a3 B+^b1 B3^b2 B-^b3``."""

    coefficient: complex = 1.0
    exponents: tuple[int, int, int, int, int, int] = (0, 0, 0, 0, 0, 0)

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) != 6 or any(e < 0 for e in exps):
            raise ValueError(f"need six natural exponents, got {self.exponents!r}")
        object.__setattr__(self, "exponents", exps)
        object.__setattr__(self, "coefficient", complex(self.coefficient))

    @classmethod
    def of(cls, coefficient: complex = 1.0, **powers: int) -> "UEAMonomial":
        """Keyword form, e.g. ``UEAMonomial.of(2, a_plus=1, b_minus=3)``."""
        names = ("a_plus", "a3", "a_minus", "b_plus", "b3", "b_minus")
        unknown = set(powers) - set(names)
        if unknown:
            raise TypeError(f"unknown generator names {sorted(unknown)}")
        return cls(coefficient, tuple(powers.get(name, 0) for name in names))

    @property
    def shift(self) -> tuple[int, int]:
        """Index displacement ``(a1 - a3, b1 - b3)`` of a basis entry."""
        a1, _, a3, b1, _, b3 = self.exponents
        return a1 - a3, b1 - b3

    def word(self) -> list[Generator]:
        """Generators of the ordered word, leftmost first."""
        return [g for g, e in zip(ORDERED_WORD, self.exponents) for _ in range(e)]


@dataclass(frozen=True)
class OperatorExpr:
    """Finite sum of ordered monomials."""

    monomials: tuple[UEAMonomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "monomials", tuple(self.monomials))

    @classmethod
    def of(cls, *monomials: UEAMonomial) -> "OperatorExpr":
        return cls(monomials)

    @classmethod
    def generator(cls, g: Generator, coefficient: complex = 1.0) -> "OperatorExpr":
        """Single generator expressed in the ordered basis (``K -> A3 - 1/2``)."""
        if g is Generator.K:
            return cls.of(UEAMonomial(coefficient, (0, 1, 0, 0, 0, 0)), UEAMonomial(-0.5 * coefficient))
        if g is Generator.L:
            return cls.of(UEAMonomial(coefficient, (0, 0, 0, 0, 1, 0)), UEAMonomial(-0.5 * coefficient))
        exps = [0] * 6
        exps[ORDERED_WORD.index(g)] = 1
        return cls.of(UEAMonomial(coefficient, tuple(exps)))

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return OperatorExpr(self.monomials + other.monomials)

    def __neg__(self) -> "OperatorExpr":
        return self.scaled(-1)

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return self + (-other)

    def scaled(self, factor: complex) -> "OperatorExpr":
        return OperatorExpr(tuple(UEAMonomial(m.coefficient * factor, m.exponents) for m in self.monomials))

    def simplified(self) -> "OperatorExpr":
        """Merge monomials with equal words (first occurrence order) and drop zeros."""
        merged: dict[tuple[int, ...], complex] = {}
        for mono in self.monomials:
            merged[mono.exponents] = merged.get(mono.exponents, 0j) + mono.coefficient
        return OperatorExpr(tuple(UEAMonomial(c, e) for e, c in merged.items() if c != 0))

    def __str__(self) -> str:
        from .parser import format_operator

        return format_operator(self)


def _raise(entries: np.ndarray, axis: int) -> np.ndarray:
    # g[k] = k * f[k-1], table grows by one along axis
    shape = list(entries.shape)
    shape[axis] += 1
    out = np.zeros(shape, dtype=complex)
    idx = np.arange(1, shape[axis])
    factor = idx.reshape((-1, 1) if axis == 0 else (1, -1))
    if axis == 0:
        out[1:, :] = factor * entries
    else:
        out[:, 1:] = factor * entries
    return out


def _lower(entries: np.ndarray, axis: int) -> np.ndarray:
    # g[k] = (k + 1) * f[k+1], same shape
    out = np.zeros_like(entries)
    n = entries.shape[axis]
    factor = np.arange(1, n).reshape((-1, 1) if axis == 0 else (1, -1))
    if axis == 0:
        out[:-1, :] = factor * entries[1:, :]
    else:
        out[:, :-1] = factor * entries[:, 1:]
    return out


def _diagonal(entries: np.ndarray, axis: int, offset: float) -> np.ndarray:
    n = entries.shape[axis]
    factor = (np.arange(n) + offset).reshape((-1, 1) if axis == 0 else (1, -1))
    return factor * entries


def _apply(g: Generator, entries: np.ndarray) -> np.ndarray:
    if g is Generator.A_PLUS:
        return _raise(entries, 0)
    if g is Generator.A_MINUS:
        return _lower(entries, 0)
    if g is Generator.A3:
        return _diagonal(entries, 0, 0.5)
    if g is Generator.K:
        return _diagonal(entries, 0, 0.0)
    if g is Generator.B_PLUS:
        return _raise(entries, 1)
    if g is Generator.B_MINUS:
        return _lower(entries, 1)
    if g is Generator.B3:
        return _diagonal(entries, 1, 0.5)
    if g is Generator.L:
        return _diagonal(entries, 1, 0.0)
    raise TypeError(f"not a generator: {g!r}")


def apply_generator(g: Generator | str, c: CoefficientTable) -> CoefficientTable:
    """Apply one generator to the function whose coefficients are ``c``."""
    return CoefficientTable(_apply(Generator(g), c.entries))


def apply_monomial(m: UEAMonomial, c: CoefficientTable) -> CoefficientTable:
    """Apply an ordered monomial; the rightmost generator acts first."""
    entries = c.entries
    for g in reversed(m.word()):
        entries = _apply(g, entries)
    return CoefficientTable(m.coefficient * entries)


def apply_operator(o: OperatorExpr, c: CoefficientTable) -> CoefficientTable:
    """Sum of :func:`apply_monomial` over the monomials of ``o``.

    The empty expression is the zero operator; the result keeps the shape
    of ``c``.
    """
    out = CoefficientTable.zeros(c.max_k, c.max_l)
    for mono in o.monomials:
        out = out + apply_monomial(mono, c)
    return out


def _as_operator(x) -> OperatorExpr:
    if isinstance(x, OperatorExpr):
        return x
    if isinstance(x, UEAMonomial):
        return OperatorExpr.of(x)
    return OperatorExpr.generator(Generator(x))


def _compose(outer, inner, c: CoefficientTable) -> CoefficientTable:
    return apply_operator(_as_operator(outer), apply_operator(_as_operator(inner), c))


def commutator(x, y, c: CoefficientTable) -> CoefficientTable:
    """``[x, y] c = x(y c) - y(x c)`` for generators, monomials or expressions."""
    return _compose(x, y, c) - _compose(y, x, c)


def casimir(family: str, c: CoefficientTable) -> CoefficientTable:
    """``(1/2){X+, X-} - X3**2`` for ``family`` ``"A"`` or ``"B"``.

    On every table of this representation the result is ``c / 4``.
    """
    family = family.upper()
    if family not in ("A", "B"):
        raise ValueError(f"family must be 'A' or 'B', got {family!r}")
    plus, minus, third = (Generator(family + s) for s in ("+", "-", "3"))
    anti = _compose(plus, minus, c) + _compose(minus, plus, c)
    return 0.5 * anti - _compose(third, third, c)


def commutator_defect(g1, g2, c: CoefficientTable, expected: OperatorExpr | Iterable[UEAMonomial] = ()) -> float:
    """Largest entry of ``|([g1, g2] - expected) c|``."""
    if not isinstance(expected, OperatorExpr):
        expected = OperatorExpr(tuple(expected))
    residual = commutator(g1, g2, c) - apply_operator(expected, c)
    return float(np.max(np.abs(residual.entries)))
