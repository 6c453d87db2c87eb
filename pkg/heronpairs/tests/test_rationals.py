"""Tests for core/rationals: parsing, canonical formatting, coercion."""

from fractions import Fraction

import pytest
import sympy as sp

from heronpairs.core.errors import ParseError
from heronpairs.core.rationals import as_rational, format_rational, parse_rational, to_sympy


def test_parse_simple():
    assert parse_rational("7/6") == Fraction(7, 6)
    assert parse_rational("12") == 12
    assert parse_rational("+3/9") == Fraction(1, 3)


def test_parse_reduces_and_keeps_sign():
    assert parse_rational("-4/8") == Fraction(-1, 2)


def test_parse_zero_denominator():
    with pytest.raises(ParseError) as exc:
        parse_rational("1/0")
    assert exc.value.position == 2


def test_parse_rejects_garbage_with_position():
    with pytest.raises(ParseError) as exc:
        parse_rational("3/4x")
    assert exc.value.position == 3
    with pytest.raises(ParseError):
        parse_rational("")
    with pytest.raises(ParseError):
        parse_rational("1.5")
    with pytest.raises(ParseError):
        parse_rational("...")


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        parse_rational("abc")


def test_format_rational():
    assert format_rational(Fraction(58225, 24)) == "58225/24"
    assert format_rational(Fraction(-6, 3)) == "-2"
    assert format_rational(0) == "0"


def test_print_parse_round_trip():
    for q in (Fraction(0), Fraction(-1, 2), Fraction(10402718520025, 2639802), Fraction(7)):
        assert parse_rational(format_rational(q)) == q


def test_as_rational_accepts_exact_types():
    assert as_rational(3) == 3
    assert as_rational("5/10") == Fraction(1, 2)
    assert as_rational(sp.Rational(3, 7)) == Fraction(3, 7)
    assert as_rational(Fraction(2, 3)) == Fraction(2, 3)


def test_as_rational_refuses_inexact():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        as_rational(True)
    with pytest.raises(TypeError):
        as_rational(sp.sqrt(2))


def test_to_sympy():
    assert to_sympy(Fraction(-3, 4)) == sp.Rational(-3, 4)
