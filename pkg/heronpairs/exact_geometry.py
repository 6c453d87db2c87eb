"""Exact rational triangles: sides, Heron quantities, (x, y, z) and (x, y, t) coordinates."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Any, Iterable

from heronpairs.core.errors import DegenerateParam, InvalidSides, NegativeInput
from heronpairs.core.rationals import as_rational, format_rational

logger = logging.getLogger(__name__)


def heron_product(a: Fraction, b: Fraction, c: Fraction) -> Fraction:
    """(a+b+c)(a+b-c)(b+c-a)(c+a-b), i.e. 16·A² for a genuine triangle."""
    return (a + b + c) * (a + b - c) * (b + c - a) * (c + a - b)


@dataclass(frozen=True)
class Triangle:
    """Three positive rational sides satisfying the strict triangle inequality."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self) -> None:
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if min(self.a, self.b, self.c) <= 0:
            raise InvalidSides(f"non-positive side in {self.sides}")
        if heron_product(self.a, self.b, self.c) <= 0:
            raise InvalidSides(f"sides {self.sides} violate the triangle inequality")

    @property
    def sides(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c)

    @property
    def perimeter(self) -> Fraction:
        return self.a + self.b + self.c

    def sorted_sides(self) -> tuple[Fraction, Fraction, Fraction]:
        a, b, c = sorted(self.sides)
        return (a, b, c)

    def scaled(self, factor: Fraction) -> Triangle:
        return Triangle(self.a * factor, self.b * factor, self.c * factor)

    def to_dict(self) -> dict[str, str]:
        return {"a": format_rational(self.a), "b": format_rational(self.b), "c": format_rational(self.c)}


@dataclass(frozen=True)
class HeronCertificate:
    """A triangle with its exact area A, circumradius R, inradius r and perimeter P."""

    triangle: Triangle
    area: Fraction
    circumradius: Fraction
    inradius: Fraction
    perimeter: Fraction

    def identities(self) -> dict[str, bool]:
        """Exact identities every certificate must satisfy."""
        a, b, c = self.triangle.sides
        return {
            "area_squared": 16 * self.area**2 == heron_product(a, b, c),
            "circumradius": a * b * c == 4 * self.circumradius * self.area,
            "inradius": 2 * self.area == self.inradius * self.perimeter,
            "perimeter": self.perimeter == a + b + c,
            "euler_inequality": self.circumradius >= 2 * self.inradius,
        }

    def to_dict(self) -> dict[str, str]:
        out = self.triangle.to_dict()
        out.update(
            area=format_rational(self.area),
            circumradius=format_rational(self.circumradius),
            inradius=format_rational(self.inradius),
            perimeter=format_rational(self.perimeter),
        )
        return out


@dataclass(frozen=True)
class ParamTriangle:
    """Coordinates (x, y, t) with t²·yz = (x+y+z)·x; z is derived."""

    x: Fraction
    y: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        for name in ("x", "y", "t"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        for name in ("x", "y", "t"):
            if getattr(self, name) == 0:
                raise DegenerateParam(f"{name} must be nonzero", factor=name)
        if self.denominator == 0:
            raise DegenerateParam("t^2*y - x vanishes", factor="t^2*y - x")

    @property
    def denominator(self) -> Fraction:
        return self.t**2 * self.y - self.x

    @property
    def z(self) -> Fraction:
        return (self.x + self.y) * self.x / self.denominator


def heron_area_squared(tri: Triangle) -> Fraction:
    return heron_product(tri.a, tri.b, tri.c) / 16


def rational_sqrt(q: Any) -> Fraction | None:
    """Exact non-negative square root of q, or None when q is not a rational square."""
    value = as_rational(q)
    if value < 0:
        raise NegativeInput(f"square root of negative value {format_rational(value)}")
    num, den = value.numerator, value.denominator
    root_num, root_den = isqrt(num), isqrt(den)
    if root_num * root_num != num or root_den * root_den != den:
        return None
    return Fraction(root_num, root_den)


def certify_heron(tri: Triangle) -> HeronCertificate | None:
    """Certificate with exact A, R, r, P, or None when the area is irrational."""
    area = rational_sqrt(heron_area_squared(tri))
    if area is None:
        return None
    perimeter = tri.perimeter
    return HeronCertificate(
        triangle=tri,
        area=area,
        circumradius=tri.a * tri.b * tri.c / (4 * area),
        inradius=2 * area / perimeter,
        perimeter=perimeter,
    )


def xyz_from_sides(tri: Triangle) -> tuple[Fraction, Fraction, Fraction]:
    """Incircle tangent lengths: a = y+z, b = z+x, c = x+y."""
    a, b, c = tri.sides
    return ((-a + b + c) / 2, (a - b + c) / 2, (a + b - c) / 2)


def sides_from_xyz(x: Any, y: Any, z: Any) -> Triangle:
    x, y, z = as_rational(x), as_rational(y), as_rational(z)
    if 0 in (x, y, z):
        raise InvalidSides("x, y, z must be nonzero")
    return Triangle(y + z, z + x, x + y)


def normalize_signs(
    sides: Iterable[Any], error: type[Exception] = DegenerateParam
) -> tuple[int, tuple[Fraction, Fraction, Fraction]]:
    """Negate an all-negative triple; mixed signs or a zero side raise `error`.

    Returns the sign applied and the positive triple.
    """
    a, b, c = (as_rational(s) for s in sides)
    if a > 0 and b > 0 and c > 0:
        return 1, (a, b, c)
    if a < 0 and b < 0 and c < 0:
        return -1, (-a, -b, -c)
    shown = ", ".join(format_rational(s) for s in (a, b, c))
    if 0 in (a, b, c):
        raise error(f"zero side in ({shown})", factor="side")
    raise error(f"mixed side signs in ({shown})", factor="side signs")


def triangle_from_param(p: ParamTriangle) -> tuple[Triangle, HeronCertificate]:
    """Sides and certificate induced by (x, y, t), after sign normalization."""
    x, y, t, den = p.x, p.y, p.t, p.denominator
    raw = ((x**2 + t**2 * y**2) / den, x * y * (t**2 + 1) / den, x + y)
    _, sides = normalize_signs(raw)
    try:
        tri = Triangle(*sides)
    except InvalidSides as exc:
        raise DegenerateParam(str(exc), factor="side") from exc
    cert = HeronCertificate(
        triangle=tri,
        area=abs(t * x * y * (x + y) / den),
        circumradius=abs((x**2 + t**2 * y**2) * (t**2 + 1) / (4 * den * t)),
        inradius=abs(x / t),
        perimeter=abs(2 * t**2 * y * (x + y) / den),
    )
    return tri, cert


def param_from_triangle(cert: HeronCertificate) -> ParamTriangle:
    """Inverse of triangle_from_param for the side order given."""
    x, y, z = xyz_from_sides(cert.triangle)
    return ParamTriangle(x, y, cert.area / (y * z))


def primitive_scale(values: Iterable[Any]) -> Fraction:
    """Positive k such that k·values are integers with gcd 1."""
    qs = [as_rational(v) for v in values]
    if not qs or any(q == 0 for q in qs):
        raise ValueError("primitive scaling needs nonzero values")
    common_den = lcm(*(q.denominator for q in qs))
    common_gcd = gcd(*(q.numerator * (common_den // q.denominator) for q in qs))
    return Fraction(common_den, abs(common_gcd))


def normalize_primitive(tri: Triangle) -> Triangle:
    """Coprime integer-sided triangle similar to `tri`."""
    return tri.scaled(primitive_scale(tri.sides))


def is_right(tri: Triangle) -> bool:
    a, b, c = tri.sorted_sides()
    return a * a + b * b == c * c
