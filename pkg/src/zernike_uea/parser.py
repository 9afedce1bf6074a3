"""Text syntax for operators in the ordered monomial basis.

Grammar::

    expr    := [sign] term (sign term)*
    term    := scalar ['*' factor*] | factor+
    factor  := gen ['^' nat]
    gen     := 'A+' | 'A-' | 'A3' | 'B+' | 'B-' | 'B3' | 'K' | 'L'
    scalar  := real ['i'] | 'i' | '(' [sign] real [sign real 'i'] ')' | '(' [sign] real 'i' ')'

Factors inside a term must follow the order ``A+ A3 A- B+ B3 B-``; ``K``
and ``L`` take the slots of ``A3`` and ``B3`` and are rewritten as
``A3 - 1/2`` and ``B3 - 1/2``. Words in any other order are rejected,
not reordered. ``"2.0*"`` and ``"2"`` both denote twice the identity.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass

from .ladder import ORDERED_WORD, Generator, OperatorExpr, UEAMonomial

__all__ = ["ParseError", "OrderingError", "parse_operator", "format_operator"]


class ParseError(ValueError):
    """Syntax error; ``offset`` is the byte offset into the UTF-8 source."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


class OrderingError(ParseError):
    """A word whose factors are not in the ordered monomial basis."""


_SLOT = {g: i for i, g in enumerate(ORDERED_WORD)}
_SLOT[Generator.K] = _SLOT[Generator.A3]
_SLOT[Generator.L] = _SLOT[Generator.B3]

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<gen>[AB][+\-−3]|K|L)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+\-]?\d+)?)
  | (?P<imag>i)
  | (?P<op>[+\-−*^()])
    """,
    re.VERBOSE,
)


@dataclass
class _Token:
    kind: str
    text: str
    pos: int  # character index


def _tokenize(src: str) -> list[_Token]:
    tokens, pos = [], 0
    while pos < len(src):
        match = _TOKEN.match(src, pos)
        if match is None:
            raise ParseError(f"unexpected character {src[pos]!r}", len(src[:pos].encode()))
        kind = match.lastgroup
        if kind != "ws":
            tokens.append(_Token(kind, match.group().replace("−", "-"), pos))
        pos = match.end()
    tokens.append(_Token("end", "", len(src)))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.tokens = _tokenize(src)
        self.i = 0

    def error(self, message: str, token: _Token | None = None, cls=ParseError):
        token = token or self.peek()
        return cls(message, len(self.src[: token.pos].encode()))

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        token = self.tokens[self.i]
        self.i += 1
        return token

    def at(self, kind: str, text: str | None = None) -> bool:
        token = self.peek()
        return token.kind == kind and (text is None or token.text == text)

    def expect(self, kind: str, text: str | None = None) -> _Token:
        if not self.at(kind, text):
            want = text or kind
            got = self.peek().text or "end of input"
            raise self.error(f"expected {want!r}, found {got!r}")
        return self.take()

    def sign(self) -> int | None:
        if self.at("op", "+"):
            self.take()
            return 1
        if self.at("op", "-"):
            self.take()
            return -1
        return None

    def expr(self) -> list[UEAMonomial]:
        monomials = []
        sign = self.sign() or 1
        while True:
            monomials.extend(UEAMonomial(sign * m.coefficient, m.exponents) for m in self.term())
            if self.at("end"):
                return monomials
            sign = self.sign()
            if sign is None:
                raise self.error(f"expected '+', '-' or end of input, found {self.peek().text!r}")

    def real(self) -> float:
        return float(self.expect("num").text)

    def scalar(self) -> complex | None:
        if self.at("num"):
            value = self.real()
            if self.at("imag"):
                self.take()
                return complex(0, value)
            return complex(value)
        if self.at("imag"):
            self.take()
            return 1j
        if self.at("op", "("):
            self.take()
            lead = self.sign() or 1
            first = lead * self.real()
            if self.at("imag"):
                self.take()
                value = complex(0, first)
            else:
                value = complex(first)
                second_sign = self.sign()
                if second_sign is not None:
                    value += complex(0, second_sign * self.real())
                    self.expect("imag", "i")
            self.expect("op", ")")
            return value
        return None

    def factors(self) -> list[tuple[Generator, int, _Token]]:
        out = []
        while self.at("gen"):
            token = self.take()
            power = 1
            if self.at("op", "^"):
                self.take()
                exp_token = self.expect("num")
                if not exp_token.text.isdigit():
                    raise self.error("exponent must be a natural number", exp_token)
                power = int(exp_token.text)
            out.append((Generator(token.text), power, token))
        return out

    def term(self) -> list[UEAMonomial]:
        start = self.peek()
        coefficient = self.scalar()
        if coefficient is not None:
            if self.at("op", "*"):
                self.take()
                factors = self.factors()
            else:
                factors = []
        else:
            factors = self.factors()
            if not factors:
                raise self.error(f"expected a scalar or generator, found {start.text or 'end of input'!r}")
            coefficient = 1.0
        return _expand(coefficient, factors, self)


def _expand(coefficient: complex, factors, parser: _Parser) -> list[UEAMonomial]:
    slots: list[dict[int, complex]] = [{0: 1.0} for _ in range(6)]
    last_slot = -1
    for gen, power, token in factors:
        slot = _SLOT[gen]
        if slot < last_slot:
            raise parser.error(
                f"{gen} after {ORDERED_WORD[last_slot]}: factors must follow the ordered "
                "monomial basis A+ A3 A- B+ B3 B-",
                token,
                OrderingError,
            )
        last_slot = slot
        if gen in (Generator.K, Generator.L):
            # (X3 - 1/2)^p by the binomial theorem
            factor = {j: math.comb(power, j) * (-0.5) ** (power - j) for j in range(power + 1)}
        else:
            factor = {power: 1.0}
        product: dict[int, complex] = {}
        for (a, ca), (b, cb) in itertools.product(slots[slot].items(), factor.items()):
            product[a + b] = product.get(a + b, 0.0) + ca * cb
        slots[slot] = product
    monomials = []
    for combo in itertools.product(*(sorted(s.items(), reverse=True) for s in slots)):
        value = coefficient
        for _, c in combo:
            value *= c
        monomials.append(UEAMonomial(value, tuple(e for e, _ in combo)))
    return monomials


def parse_operator(src: str) -> OperatorExpr:
    """Parse operator text into a simplified :class:`OperatorExpr`.

    Raises
    ------
    ParseError
        On malformed input, with the byte offset of the offending token.
    OrderingError
        When a word's factors are out of the ordered-basis order.
    """
    return OperatorExpr(tuple(_Parser(src).expr())).simplified()


def _format_real(x: float) -> str:
    return f"{x:.17g}"


def _format_word(exponents) -> str:
    parts = []
    for gen, e in zip(ORDERED_WORD, exponents):
        if e == 1:
            parts.append(gen.value)
        elif e > 1:
            parts.append(f"{gen.value}^{e}")
    return " ".join(parts)


def format_operator(o: OperatorExpr) -> str:
    """Render an expression in the syntax accepted by :func:`parse_operator`."""
    terms = []
    for mono in o.monomials:
        c = mono.coefficient
        negative = c.imag == 0 and math.copysign(1.0, c.real) < 0
        if c.imag == 0:
            scalar = _format_real(abs(c.real))
        else:
            im_sign = "-" if math.copysign(1.0, c.imag) < 0 else "+"
            scalar = f"({_format_real(c.real)}{im_sign}{_format_real(abs(c.imag))}i)"
        word = _format_word(mono.exponents)
        body = f"{scalar}*{word}" if word else scalar
        terms.append(("-" if negative else "+", body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        text += f" {sign} {body}"
    return text
