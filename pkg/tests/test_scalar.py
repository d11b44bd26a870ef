from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhodge.scalar import (I, ONE, Q, S, ZERO, ParseError, PoleError, ScalarQ, conjugate, eval_at,
                           format_scalar, parse_scalar, qnum, symbol)


def test_parse_literals():
    assert parse_scalar("q^2 - q^-2") == Q ** 2 - Q ** -2
    assert parse_scalar("i*(q - q^-1)") == I * (Q - Q ** -1)
    assert parse_scalar("-alpha") == -symbol("alpha")


def test_pole_at_q_one():
    with pytest.raises(PoleError):
        eval_at(parse_scalar("1/(q^2-1)"), 1)


@pytest.mark.parametrize("text", ["q^^2", "1/", "(q", "foo", "2**"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_scalar(text)


def test_qnum():
    assert qnum(2) == ONE
    assert qnum(4) == Q + Q ** -1
    assert qnum(1) == (S - S ** -1) / (Q - Q ** -1)
    assert eval_at(qnum(4), 2) == ScalarQ(Fraction(5, 2))


def test_conjugation():
    m = symbol("m")
    assert conjugate(I) == -I
    assert conjugate(Q - Q ** -1) == Q - Q ** -1
    assert conjugate(I * m * Q ** 2) == -I * m * Q ** 2


def test_classical_limits():
    assert eval_at(1 + Q ** 2, 1) == ScalarQ(2)
    assert eval_at(parse_scalar("2*(q^4+2*q^2+6+2*q^-2+q^-4)"), 1) == ScalarQ(24)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


_atoms = st.sampled_from(["q", "s", "alpha", "m", "i", "2", "1/3", "q^-1", "(q^2 + 1)"])


@st.composite
def expressions(draw, depth=3):
    if depth == 0:
        return draw(_atoms)
    op = draw(st.sampled_from(["+", "-", "*", "atom"]))
    if op == "atom":
        return draw(_atoms)
    return f"({draw(expressions(depth - 1))}) {op} ({draw(expressions(depth - 1))})"


@settings(max_examples=60, deadline=None)
@given(expressions())
def test_format_parse_round_trip(text):
    x = parse_scalar(text)
    assert parse_scalar(format_scalar(x)) == x


@settings(max_examples=60, deadline=None)
@given(expressions(), expressions())
def test_field_axioms(a, b):
    x, y = parse_scalar(a), parse_scalar(b)
    assert x + y == y + x
    assert x * y == y * x
    assert conjugate(x * y) == conjugate(x) * conjugate(y)
    if not y.is_zero():
        assert (x / y) * y == x
