"""Tests for the expression grammar: goldens, operator rules, error
positions, and a render/parse round trip."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclecert.algebra import Polynomial, RationalFunction
from cyclecert.errors import (
    DivisionByZeroDenominator,
    ParseError,
    UnknownIdentifier,
)
from cyclecert.exprparse import parse_expression

X = Polynomial.variable("x")
Y = Polynomial.variable("y")
B = Polynomial.variable("b")


def rf(p) -> RationalFunction:
    return RationalFunction(p, 1)


class TestGoldens:
    def test_polynomial_with_parameter(self):
        f = parse_expression("-x + (b^2 - x^2)*y", params=("b",))
        assert f == rf(-X + (B * B - X * X) * Y)
        assert f.render() == "b^2*y - x^2*y - x"

    def test_rational_damping(self):
        f = parse_expression("x*(1 - c*x^2)/(1 + c*x^2)", vars=("x",),
                             params=("c",))
        assert f.render() == "(-c*x^3 + x)/(c*x^2 + 1)"

    def test_fraction_constants(self):
        f = parse_expression("3/4*x^2 - 1/2", vars=("x",))
        assert f == rf(Fraction(3, 4) * X * X - Fraction(1, 2))

    def test_division_by_trailing_factor(self):
        # term is left associative: a/b*c == (a/b)*c
        f = parse_expression("x/2*y")
        assert f == rf(Fraction(1, 2) * X * Y)


class TestOperatorRules:
    def test_power_is_right_associative(self):
        f = parse_expression("2^3^2")
        assert f == RationalFunction.constant(512)

    def test_power_binds_tighter_than_unary_minus(self):
        f = parse_expression("-x^2")
        assert f == rf(-(X * X))

    def test_double_negation(self):
        assert parse_expression("--x") == rf(X)

    def test_whitespace_and_newlines(self):
        f = parse_expression("x\n  + y\t- 1")
        assert f == rf(X + Y - 1)

    def test_zero_exponent(self):
        assert parse_expression("x^0") == RationalFunction.constant(1)


class TestErrors:
    def test_negative_exponent_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x^-1")
        assert "exponent" in str(exc.value)

    def test_symbolic_exponent_rejected(self):
        with pytest.raises(ParseError):
            parse_expression("x ^ y")

    def test_dangling_operator(self):
        with pytest.raises(ParseError):
            parse_expression("x +")

    def test_unclosed_paren(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("(x + y")
        assert "')'" in str(exc.value)

    def test_no_implicit_multiplication(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("2x")
        assert "after expression" in str(exc.value)

    def test_error_carries_line_and_column(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("x +\n  y ? 1")
        assert exc.value.line == 2
        assert exc.value.col == 5

    def test_unexpected_character(self):
        with pytest.raises(ParseError):
            parse_expression("x @ y")

    def test_unknown_identifier_lists_known_names(self):
        with pytest.raises(UnknownIdentifier) as exc:
            parse_expression("x + z", vars=("x", "y"), params=("b",))
        msg = str(exc.value)
        assert "'z'" in msg and "x" in msg and "b" in msg

    def test_parameter_must_be_declared(self):
        with pytest.raises(UnknownIdentifier):
            parse_expression("eps*x", vars=("x", "y"))

    def test_division_by_zero_polynomial(self):
        with pytest.raises(DivisionByZeroDenominator):
            parse_expression("x/(y - y)")

    def test_empty_input(self):
        with pytest.raises(ParseError):
            parse_expression("")


# ---------------------------------------------------------------------------
# render / parse round trip
# ---------------------------------------------------------------------------

_coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, max_terms=4):
    p = Polynomial.constant(0)
    for _ in range(draw(st.integers(0, max_terms))):
        c = draw(_coeffs)
        i = draw(st.integers(0, 3))
        j = draw(st.integers(0, 3))
        p = p + Polynomial.constant(c) * X ** i * Y ** j
    return p


@settings(max_examples=120, deadline=None)
@given(num=polys(), den=polys())
def test_round_trip_parse_of_render(num, den):
    if den.is_zero:
        den = Polynomial.constant(1)
    f = RationalFunction(num, den)
    assert parse_expression(f.render()) == f


@settings(max_examples=60, deadline=None)
@given(p=polys())
def test_round_trip_polynomial_render(p):
    assert parse_expression(p.render()) == rf(p)
