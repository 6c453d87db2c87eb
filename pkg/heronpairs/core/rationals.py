"""Exact rational plumbing: canonical "p/q" text form and sympy conversion."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any

import sympy as sp

from heronpairs.core.errors import ParseError

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse "p", "-p" or "p/q" into a reduced Fraction. Whitespace is not allowed inside."""
    if not isinstance(text, str):
        raise ParseError("expected a string", 0)
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    if not stripped:
        raise ParseError("empty rational literal", offset)
    match = _RATIONAL_RE.match(stripped)
    if match is None:
        raise ParseError(f"invalid rational literal {text!r}", offset)
    if match.end() != len(stripped):
        raise ParseError(f"unexpected character {stripped[match.end()]!r}", offset + match.end())
    numerator, _, denominator = stripped.partition("/")
    if denominator and int(denominator) == 0:
        raise ParseError("zero denominator", offset + len(numerator) + 1)
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction | int) -> str:
    q = as_rational(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value: Any) -> Fraction:
    """Coerce int, Fraction, sympy Rational or "p/q" text to Fraction. Floats are refused."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, sp.Basic):
        if not value.is_Rational:
            raise TypeError(f"not an exact rational: {value}")
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, _RationalABC):
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def to_sympy(value: Any) -> sp.Rational:
    q = as_rational(value)
    return sp.Rational(q.numerator, q.denominator)
