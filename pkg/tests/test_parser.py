import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zernike_uea.ladder import OperatorExpr, UEAMonomial
from zernike_uea.parser import OrderingError, ParseError, format_operator, parse_operator


def monos(o):
    return [(m.coefficient, m.exponents) for m in o.monomials]


ACCEPT = [
    ("A+", [(1, (1, 0, 0, 0, 0, 0))]),
    ("2.0*A+^2 B-", [(2, (2, 0, 0, 0, 0, 1))]),
    ("K", [(1, (0, 1, 0, 0, 0, 0)), (-0.5, (0, 0, 0, 0, 0, 0))]),
    ("L", [(1, (0, 0, 0, 0, 1, 0)), (-0.5, (0, 0, 0, 0, 0, 0))]),
    ("1.0*", [(1, (0, 0, 0, 0, 0, 0))]),
    ("3", [(3, (0, 0, 0, 0, 0, 0))]),
    ("A+ B+", [(1, (1, 0, 0, 1, 0, 0))]),
    ("A+B+", [(1, (1, 0, 0, 1, 0, 0))]),
    ("A+ A3 A- B+ B3 B-", [(1, (1, 1, 1, 1, 1, 1))]),
    ("A+ A+", [(1, (2, 0, 0, 0, 0, 0))]),
    ("A+ + A-", [(1, (1, 0, 0, 0, 0, 0)), (1, (0, 0, 1, 0, 0, 0))]),
    ("-A3 - 2*B3", [(-1, (0, 1, 0, 0, 0, 0)), (-2, (0, 0, 0, 0, 1, 0))]),
    ("(1+2i)*A+", [(1 + 2j, (1, 0, 0, 0, 0, 0))]),
    ("(1-0.5i)*B-^3", [(1 - 0.5j, (0, 0, 0, 0, 0, 3))]),
    ("2i*A-", [(2j, (0, 0, 1, 0, 0, 0))]),
    ("i*B+", [(1j, (0, 0, 0, 1, 0, 0))]),
    ("(-3i)*A3", [(-3j, (0, 1, 0, 0, 0, 0))]),
    ("1e-3*A+", [(1e-3, (1, 0, 0, 0, 0, 0))]),
    ("K^2", [(1, (0, 2, 0, 0, 0, 0)), (-1, (0, 1, 0, 0, 0, 0)), (0.25, (0, 0, 0, 0, 0, 0))]),
    ("A3 K", [(1, (0, 2, 0, 0, 0, 0)), (-0.5, (0, 1, 0, 0, 0, 0))]),
    ("A+ K B+", [(1, (1, 1, 0, 1, 0, 0)), (-0.5, (1, 0, 0, 1, 0, 0))]),
    ("A+ - A+", []),
    ("0", []),
    ("A+^0", [(1, (0, 0, 0, 0, 0, 0))]),
    ("A− B+", [(1, (0, 0, 1, 1, 0, 0))]),
    ("  A+   ^ 2  ", [(1, (2, 0, 0, 0, 0, 0))]),
]


@pytest.mark.parametrize("src,expected", ACCEPT, ids=[a for a, _ in ACCEPT])
def test_accept(src, expected):
    assert monos(parse_operator(src)) == expected


REJECT = [
    ("A- A+", OrderingError, 3),
    ("B+ A+", OrderingError, 3),
    ("A3 A+", OrderingError, 3),
    ("B- B3", OrderingError, 3),
    ("A+ L K", OrderingError, 5),
    ("", ParseError, 0),
    ("A", ParseError, 0),
    ("A+ *", ParseError, 3),
    ("2 A+", ParseError, 2),
    ("A+^", ParseError, 3),
    ("A+^-1", ParseError, 3),
    ("A+^1.5", ParseError, 3),
    ("(1+2)*A+", ParseError, 4),
    ("(1+2i*A+", ParseError, 5),
    ("A+ +", ParseError, 4),
    ("C+", ParseError, 0),
    ("2*3*A+", ParseError, 2),
    ("A+ $", ParseError, 3),
    ("é A+", ParseError, 0),
    ("A+ é", ParseError, 3),
]


@pytest.mark.parametrize("src,exc,offset", REJECT, ids=[a or "<empty>" for a, _, _ in REJECT])
def test_reject(src, exc, offset):
    with pytest.raises(exc) as info:
        parse_operator(src)
    assert info.value.offset == offset


def test_ordering_error_is_parse_error():
    assert issubclass(OrderingError, ParseError)


def test_ordering_message_names_basis():
    with pytest.raises(OrderingError, match="A\\+ A3 A- B\\+ B3 B-"):
        parse_operator("A- A+")


def test_byte_offset_counts_utf8():
    # the unicode minus takes three bytes
    with pytest.raises(OrderingError) as info:
        parse_operator("A− A+")
    assert info.value.offset == 5


coefficients = st.one_of(
    st.floats(-1e6, 1e6, allow_nan=False).filter(lambda x: x != 0).map(complex),
    st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False).filter(lambda z: z != 0),
)
exprs = st.lists(
    st.builds(UEAMonomial, coefficients, st.tuples(*[st.integers(0, 3)] * 6)),
    max_size=5,
).map(lambda ms: OperatorExpr(tuple(ms)).simplified())


@settings(max_examples=200)
@given(exprs)
def test_print_parse_round_trip(expr):
    assert parse_operator(format_operator(expr)) == expr


def test_format_examples():
    assert format_operator(parse_operator("2.0*A+^2 B-")) == "2*A+^2 B-"
    assert format_operator(parse_operator("K")) == "1*A3 - 0.5"
    assert format_operator(OperatorExpr()) == "0"
