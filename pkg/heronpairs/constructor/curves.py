"""Plane cubics over Q and the tangent/chord third-point construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Any, Mapping, Sequence

import sympy as sp

from heronpairs.core.errors import (
    DegenerateChord,
    DegenerateParam,
    Exhausted,
    InflectionOrDegenerate,
    NotOnCurve,
    SingularPoint,
)
from heronpairs.core.rationals import as_rational, format_rational, to_sympy

logger = logging.getLogger(__name__)

Y1, Y2, S = sp.symbols("y1 y2 s")


@dataclass(frozen=True)
class CurvePoint:
    y1: Fraction
    y2: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "y1", as_rational(self.y1))
        object.__setattr__(self, "y2", as_rational(self.y2))

    def along(self, direction: tuple[Fraction, Fraction], s: Fraction) -> CurvePoint:
        return CurvePoint(self.y1 + s * direction[0], self.y2 + s * direction[1])

    def __str__(self) -> str:
        return f"({format_rational(self.y1)}, {format_rational(self.y2)})"


@dataclass(frozen=True, eq=False)
class PlaneCubic:
    """F(y1, y2) = sum of c[i, j] * y1**i * y2**j with i + j <= 3 and total degree 3."""

    coefficients: Mapping[tuple[int, int], Fraction]

    def __post_init__(self) -> None:
        cleaned: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in self.coefficients.items():
            if i < 0 or j < 0 or i + j > 3:
                raise ValueError(f"exponent pair {(i, j)} exceeds total degree 3")
            value = as_rational(c)
            if value != 0:
                cleaned[(i, j)] = value
        if not any(i + j == 3 for i, j in cleaned):
            raise ValueError("cubic needs a nonzero coefficient of total degree 3")
        object.__setattr__(self, "coefficients", cleaned)

    @classmethod
    def from_expr(cls, expr: sp.Expr) -> PlaneCubic:
        """Build from a sympy expression in y1, y2 with rational coefficients."""
        poly = sp.Poly(sp.expand(expr), Y1, Y2, domain="QQ")
        return cls({monom: as_rational(coeff) for monom, coeff in poly.terms()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PlaneCubic):
            return NotImplemented
        return self.coefficients == other.coefficients

    __hash__ = None  # type: ignore[assignment]

    @cached_property
    def expr(self) -> sp.Expr:
        return sp.Add(*(to_sympy(c) * Y1**i * Y2**j for (i, j), c in self.coefficients.items()))

    def __call__(self, point: CurvePoint) -> Fraction:
        return sum(
            (c * point.y1**i * point.y2**j for (i, j), c in self.coefficients.items()),
            Fraction(0),
        )

    def contains(self, point: CurvePoint) -> bool:
        return self(point) == 0

    def gradient(self, point: CurvePoint) -> tuple[Fraction, Fraction]:
        d1 = Fraction(0)
        d2 = Fraction(0)
        for (i, j), c in self.coefficients.items():
            if i:
                d1 += i * c * point.y1 ** (i - 1) * point.y2**j
            if j:
                d2 += j * c * point.y1**i * point.y2 ** (j - 1)
        return d1, d2

    def restrict_to_line(
        self, point: CurvePoint, direction: tuple[Fraction, Fraction]
    ) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        """Coefficients (c0, c1, c2, c3) of F(point + s * direction) as a polynomial in s."""
        line = {
            Y1: to_sympy(point.y1) + to_sympy(direction[0]) * S,
            Y2: to_sympy(point.y2) + to_sympy(direction[1]) * S,
        }
        restricted = sp.Poly(self.expr.xreplace(line), S, domain="QQ")
        coeffs = [as_rational(c) for c in reversed(restricted.all_coeffs())]
        coeffs += [Fraction(0)] * (4 - len(coeffs))
        return coeffs[0], coeffs[1], coeffs[2], coeffs[3]


def _require_on_curve(curve: PlaneCubic, *points: CurvePoint) -> None:
    for p in points:
        residual = curve(p)
        if residual != 0:
            raise NotOnCurve(f"point {p} is off the curve (residual {format_rational(residual)})")


def tangent_direction(curve: PlaneCubic, p: CurvePoint) -> tuple[Fraction, Fraction]:
    g1, g2 = curve.gradient(p)
    if g1 == 0 and g2 == 0:
        raise SingularPoint(f"gradient vanishes at {p}", factor="gradient")
    return (g2, -g1)


def tangent_third_point(curve: PlaneCubic, p: CurvePoint) -> CurvePoint:
    """Second intersection of the tangent at p with the cubic."""
    _require_on_curve(curve, p)
    direction = tangent_direction(curve, p)
    c0, c1, c2, c3 = curve.restrict_to_line(p, direction)
    if c0 != 0 or c1 != 0:
        raise NotOnCurve(f"tangent at {p} does not touch the curve to second order")
    if c3 == 0:
        reason = "tangent line lies in the curve" if c2 == 0 else "third intersection at infinity"
        raise InflectionOrDegenerate(f"{reason} at {p}", factor="c3")
    s_star = -c2 / c3
    if s_star == 0:
        raise InflectionOrDegenerate(f"{p} is a flex", factor="c2")
    result = p.along(direction, s_star)
    logger.debug("tangent step", extra={"from": str(p), "to": str(result)})
    return result


def chord_third_point(curve: PlaneCubic, p: CurvePoint, q: CurvePoint) -> CurvePoint:
    """Third intersection of the line through p and q with the cubic."""
    if p == q:
        raise DegenerateChord(f"chord through {p} and itself", factor="p = q")
    _require_on_curve(curve, p, q)
    direction = (q.y1 - p.y1, q.y2 - p.y2)
    c0, c1, c2, c3 = curve.restrict_to_line(p, direction)
    if c0 == c1 == c2 == c3 == 0:
        raise DegenerateChord(f"line through {p} and {q} is a component", factor="line")
    if c3 == 0:
        raise DegenerateChord(f"third intersection of chord {p}, {q} is at infinity", factor="c3")
    # roots s = 0 (p) and s = 1 (q); Vieta gives the third
    s_third = -c2 / c3 - 1
    return p.along(direction, s_third)


def descend_further(
    curve: PlaneCubic, known: Sequence[CurvePoint], steps: int
) -> list[CurvePoint]:
    """New rational points by repeated tangent and chord moves.

    Tangents are tried newest point first, then chords between pairs, newest
    first; the first move giving an unseen point wins each round.
    """
    if steps < 0:
        raise ValueError("steps must be non-negative")
    points = list(dict.fromkeys(known))
    _require_on_curve(curve, *points)
    found: list[CurvePoint] = []
    while len(found) < steps:
        new_point = _next_point(curve, points)
        if new_point is None:
            if not found:
                raise Exhausted("no tangent or chord move yields a new point", factor="descent")
            logger.info(
                "descent stopped early", extra={"requested": steps, "produced": len(found)}
            )
            break
        points.append(new_point)
        found.append(new_point)
    return found


def _next_point(curve: PlaneCubic, points: list[CurvePoint]) -> CurvePoint | None:
    seen = set(points)
    newest_first = points[::-1]
    moves: list[tuple[CurvePoint, ...]] = [(p,) for p in newest_first]
    moves += [
        (p, q) for i, p in enumerate(newest_first) for q in newest_first[i + 1 :]
    ]
    for move in moves:
        try:
            if len(move) == 1:
                candidate = tangent_third_point(curve, move[0])
            else:
                candidate = chord_third_point(curve, move[0], move[1])
        except (SingularPoint, InflectionOrDegenerate, DegenerateChord) as exc:
            logger.debug("descent move degenerate: %s", exc)
            continue
        if candidate not in seen:
            return candidate
    return None


def _nonzero(**params: Any) -> dict[str, sp.Rational]:
    out = {}
    for name, value in params.items():
        q = as_rational(value)
        if q == 0:
            raise DegenerateParam(f"{name} must be nonzero", factor=name)
        out[name] = to_sympy(q)
    return out


def cubic_rp(t1: Any, t2: Any, m: Any) -> PlaneCubic:
    """Common circumradius once both perimeters equal m, as a cubic in (y1, y2)."""
    p = _nonzero(t1=t1, t2=t2, m=m)
    a, b, k = p["t1"], p["t2"], p["m"]
    lhs = (a**2 + 1) * (4 * Y1**2 * a**2 + k**2) * (2 * Y2 * b**2 + k) * b
    rhs = (b**2 + 1) * (4 * Y2**2 * b**2 + k**2) * (2 * Y1 * a**2 + k) * a
    return PlaneCubic.from_expr(lhs - rhs)


def rp_base_point(t1: Any, t2: Any, m: Any) -> CurvePoint:
    t1, t2, m = as_rational(t1), as_rational(t2), as_rational(m)
    return CurvePoint(-m / (2 * t1**2), -m / (2 * t2**2))


def cubic_rr(t1: Any, t2: Any, m: Any) -> PlaneCubic:
    """Common circumradius once both inradii equal m, as a cubic in (y1, y2)."""
    p = _nonzero(t1=t1, t2=t2, m=m)
    a, b, k = p["t1"], p["t2"], p["m"]
    expr = (
        b * (a**2 + 1) * Y1**2 * Y2
        - a * (b**2 + 1) * Y1 * Y2**2
        - k * (a**2 + 1) * Y1**2
        + k * (b**2 + 1) * Y2**2
        - k**2 * a * (b**2 + 1) * Y1
        + k**2 * b * (a**2 + 1) * Y2
        - k**3 * (a - b) * (a + b)
    )
    return PlaneCubic.from_expr(expr)


def rr_base_point(t1: Any, t2: Any, m: Any) -> CurvePoint:
    t1, t2, m = as_rational(t1), as_rational(t2), as_rational(m)
    return CurvePoint(t2 * m, t1 * m)
