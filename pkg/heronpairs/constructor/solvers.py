"""End-to-end solvers: a rational point (or quartic abscissa) in, a certified pair out."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Callable

from heronpairs.constructor.curves import (
    CurvePoint,
    cubic_rp,
    cubic_rr,
    descend_further,
    rp_base_point,
    rr_base_point,
    tangent_third_point,
)
from heronpairs.constructor.quartic import fermat_iterate, fermat_quartic_step, quartic_ra
from heronpairs.core.errors import DegeneracyError, DegenerateParam
from heronpairs.core.rationals import as_rational
from heronpairs.exact_geometry import ParamTriangle, triangle_from_param
from heronpairs.families import PairKind, TrianglePair, pair_from_sides

logger = logging.getLogger(__name__)


def _x_for_perimeter(t: Fraction, y: Fraction, m: Fraction) -> Fraction:
    den = 2 * t**2 * y + m
    if den == 0:
        raise DegenerateParam("2*t^2*y + m vanishes", factor="2*t^2*y + m")
    return t**2 * y * (m - 2 * y) / den


def pair_from_rp_point(t1: Any, t2: Any, m: Any, point: CurvePoint) -> TrianglePair:
    """Both perimeters are fixed to m; the point supplies y1, y2."""
    t1, t2, m = as_rational(t1), as_rational(t2), as_rational(m)
    x1 = _x_for_perimeter(t1, point.y1, m)
    x2 = _x_for_perimeter(t2, point.y2, m)
    first, _ = triangle_from_param(ParamTriangle(x1, point.y1, t1))
    second, _ = triangle_from_param(ParamTriangle(x2, point.y2, t2))
    return pair_from_sides(PairKind.COMMON_RP, first.sides, second.sides)


def pair_from_rr_point(t1: Any, t2: Any, m: Any, point: CurvePoint) -> TrianglePair:
    """Both inradii are fixed to m via x_i = m * t_i."""
    t1, t2, m = as_rational(t1), as_rational(t2), as_rational(m)
    first, _ = triangle_from_param(ParamTriangle(m * t1, point.y1, t1))
    second, _ = triangle_from_param(ParamTriangle(m * t2, point.y2, t2))
    return pair_from_sides(PairKind.COMMON_RR, first.sides, second.sides)


def solve_rp(t1: Any, t2: Any, m: Any = 1) -> TrianglePair:
    curve = cubic_rp(t1, t2, m)
    point = tangent_third_point(curve, rp_base_point(t1, t2, m))
    return pair_from_rp_point(t1, t2, m, point)


def solve_rr(t1: Any, t2: Any, m: Any = 1) -> TrianglePair:
    curve = cubic_rr(t1, t2, m)
    point = tangent_third_point(curve, rr_base_point(t1, t2, m))
    return pair_from_rr_point(t1, t2, m, point)


def ra_sides(
    t: Any, u: Any, n: Any = 1, q: Any = 1
) -> tuple[tuple[Fraction, Fraction, Fraction], tuple[Fraction, Fraction, Fraction]]:
    """Side triples with a1*b1*c1 = a2*b2*c2 and c1 = c2, taking m = t*n, p = u*q."""
    t, u, n, q = (as_rational(v) for v in (t, u, n, q))
    m, p = t * n, u * q
    plus = m**2 + 2 * m * n - n**2
    minus = m**2 - 2 * m * n - n**2
    c = (m**2 + n**2) * (p**2 + q**2)
    first = (plus * p**2 - minus * p * q, minus * p * q + plus * q**2, c)
    second = (minus * p**2 + plus * p * q, plus * p * q - minus * q**2, c)
    return first, second


def pair_from_ra_u(t: Any, u: Any, n: Any = 1, q: Any = 1) -> TrianglePair:
    if as_rational(n) == 0 or as_rational(q) == 0:
        raise DegenerateParam("n and q must be nonzero", factor="n*q")
    first, second = ra_sides(t, u, n, q)
    return pair_from_sides(PairKind.COMMON_RA, first, second)


def solve_ra(t: Any, n: Any = 1, q: Any = 1) -> TrianglePair:
    u = fermat_quartic_step(quartic_ra(t), 1)
    logger.debug("solve_ra abscissa", extra={"t": as_rational(t), "u": u})
    return pair_from_ra_u(t, u, n, q)


def solve_ra_iterate(t: Any, steps: int) -> list[Fraction]:
    """u values after u0 = 1, each making quartic_ra(t) a rational square."""
    return fermat_iterate(quartic_ra(t), 1, steps)


def _pairs(
    points: list[Any], build: Callable[[Any], TrianglePair]
) -> list[tuple[Any, TrianglePair]]:
    out = []
    for point in points:
        try:
            out.append((point, build(point)))
        except DegeneracyError as exc:
            logger.warning("descent point gives no pair: %s", exc)
    return out


def descend_rp(t1: Any, t2: Any, m: Any, steps: int) -> list[tuple[CurvePoint, TrianglePair]]:
    """Points beyond the base point on the common-R, common-P cubic, with their pairs."""
    points = descend_further(cubic_rp(t1, t2, m), [rp_base_point(t1, t2, m)], steps)
    return _pairs(points, lambda p: pair_from_rp_point(t1, t2, m, p))


def descend_rr(t1: Any, t2: Any, m: Any, steps: int) -> list[tuple[CurvePoint, TrianglePair]]:
    points = descend_further(cubic_rr(t1, t2, m), [rr_base_point(t1, t2, m)], steps)
    return _pairs(points, lambda p: pair_from_rr_point(t1, t2, m, p))


def descend_ra(t: Any, steps: int) -> list[tuple[Fraction, TrianglePair]]:
    return _pairs(solve_ra_iterate(t, steps), lambda u: pair_from_ra_u(t, u))
