"""Closed-form families of triangle pairs sharing a circumradius and one more invariant.

Each family is a pair of side triples that are polynomials in one or two
rational parameters. Evaluation is exact; the result is normalized to the
primitive integer pair (one common scale for both triangles) and certified.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Sequence

import sympy as sp

from heronpairs.core.errors import DegenerateFamily, InvalidSides
from heronpairs.core.rationals import as_rational, format_rational, to_sympy
from heronpairs.exact_geometry import (
    HeronCertificate,
    Triangle,
    certify_heron,
    heron_product,
    normalize_signs,
    primitive_scale,
)

logger = logging.getLogger(__name__)


class PairKind(str, Enum):
    """Which invariant, besides the circumradius, the two triangles share."""

    COMMON_RP = "common_rp"
    COMMON_RR = "common_rr"
    COMMON_RA = "common_ra"

    @property
    def other_name(self) -> str:
        return _OTHER_NAMES[self]

    @classmethod
    def from_short(cls, short: str) -> PairKind:
        """'rp' | 'rr' | 'ra' -> kind."""
        return cls(f"common_{short.lower()}")

    def other_of(self, cert: HeronCertificate) -> Fraction:
        return getattr(cert, self.other_name)


_OTHER_NAMES = {
    PairKind.COMMON_RP: "perimeter",
    PairKind.COMMON_RR: "inradius",
    PairKind.COMMON_RA: "area",
}


@dataclass(frozen=True)
class TrianglePair:
    """Two certified triangles and the invariants they share.

    Built unchecked so that corrupted pairs can still be handed to verify_pair.
    """

    first: HeronCertificate
    second: HeronCertificate
    kind: PairKind
    shared_circumradius: Fraction
    shared_other: Fraction
    scale_first: Fraction = Fraction(1)
    scale_second: Fraction = Fraction(1)

    @property
    def key(self) -> tuple[Fraction, Fraction]:
        return (self.shared_circumradius, self.shared_other)

    def side_classes(self) -> frozenset[tuple[Fraction, Fraction, Fraction]]:
        return frozenset((self.first.triangle.sorted_sides(), self.second.triangle.sorted_sides()))

    def max_side(self) -> Fraction:
        return max(self.first.triangle.sides + self.second.triangle.sides)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    kind: PairKind
    checks: list[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(name, bool(passed), detail))


def pair_from_sides(
    kind: PairKind,
    first: Sequence[Any],
    second: Sequence[Any],
) -> TrianglePair:
    """Sign-normalize, scale both triples jointly to primitive integers, certify, check."""
    _, s1 = normalize_signs(first, error=DegenerateFamily)
    _, s2 = normalize_signs(second, error=DegenerateFamily)
    scale = primitive_scale(s1 + s2)
    try:
        t1 = Triangle(*(v * scale for v in s1))
        t2 = Triangle(*(v * scale for v in s2))
    except InvalidSides as exc:
        raise DegenerateFamily(str(exc), factor="triangle inequality") from exc
    c1, c2 = certify_heron(t1), certify_heron(t2)
    if c1 is None or c2 is None:
        raise DegenerateFamily("a member triangle has irrational area", factor="area")
    if t1.sorted_sides() == t2.sorted_sides():
        raise DegenerateFamily("the two triangles are congruent", factor="congruence")
    if c1.circumradius != c2.circumradius or kind.other_of(c1) != kind.other_of(c2):
        raise DegenerateFamily(
            f"shared invariants disagree for {kind.value}", factor="shared invariants"
        )
    return TrianglePair(
        first=c1,
        second=c2,
        kind=kind,
        shared_circumradius=c1.circumradius,
        shared_other=kind.other_of(c1),
        scale_first=scale,
        scale_second=scale,
    )


T1, T2, T = sp.symbols("t1 t2 t")


@dataclass(frozen=True)
class FamilyFormula:
    """Published side polynomials and closed-form shared values of one family."""

    name: str
    kind: PairKind
    params: tuple[sp.Symbol, ...]
    first: tuple[sp.Expr, sp.Expr, sp.Expr]
    second: tuple[sp.Expr, sp.Expr, sp.Expr]
    circumradius: sp.Expr
    other: sp.Expr
    # factors that appear only in denominators of the closed forms
    guards: tuple[sp.Expr, ...] = ()

    def _subs(self, values: Sequence[Any]) -> dict[sp.Symbol, sp.Rational]:
        if len(values) != len(self.params):
            raise TypeError(f"{self.name} takes {len(self.params)} parameter(s)")
        return {sym: to_sympy(v) for sym, v in zip(self.params, values)}

    def check_factors(self, values: Sequence[Any]) -> None:
        """Raise DegenerateFamily naming the first factor that vanishes."""
        subs = self._subs(values)
        for expr in (*self.first, *self.second, *self.guards):
            factor = _vanishing_factor(expr, subs)
            if factor is not None:
                raise DegenerateFamily(f"{self.name}: factor {factor} vanishes", factor=factor)

    def evaluate(self, values: Sequence[Any]) -> tuple[list[Fraction], list[Fraction]]:
        subs = self._subs(values)
        first = [as_rational(e.subs(subs)) for e in self.first]
        second = [as_rational(e.subs(subs)) for e in self.second]
        return first, second

    def closed_form(self, values: Sequence[Any]) -> tuple[Fraction, Fraction]:
        """Published (R, other) before any scaling; sign is not normalized."""
        self.check_factors(values)
        subs = self._subs(values)
        return as_rational(self.circumradius.subs(subs)), as_rational(self.other.subs(subs))

    def pair(self, values: Sequence[Any]) -> TrianglePair:
        self.check_factors(values)
        first, second = self.evaluate(values)
        result = pair_from_sides(self.kind, first, second)
        logger.debug(
            "family evaluated",
            extra={"family": self.name, "params": list(values), "scale": result.scale_first},
        )
        return result


def _factor_name(base: sp.Expr) -> str:
    _, prim = sp.primitive(base)
    return str(-prim if prim.could_extract_minus_sign() else prim)


def _vanishing_factor(expr: sp.Expr, subs: dict[sp.Symbol, sp.Rational]) -> str | None:
    for arg in sp.Mul.make_args(expr):
        base = arg.base if arg.is_Pow else arg
        if base.is_number:
            continue
        if base.subs(subs) == 0:
            return _factor_name(base)
    if expr.subs(subs) == 0:
        return str(expr)
    return None


# common circumradius and common perimeter
_F = (
    T1**4 * T2**4 + 3 * T1**4 * T2**2 + 4 * T1**3 * T2**3 + 3 * T1**2 * T2**4 + T1**4
    + 2 * T1**3 * T2 + 3 * T1**2 * T2**2 + 2 * T1 * T2**3 + T2**4
)
_G = (
    4 * T1**6 * T2**6 + 5 * T1**6 * T2**4 - 2 * T1**5 * T2**5 + 5 * T1**4 * T2**6
    + 3 * T1**6 * T2**2 - 2 * T1**5 * T2**3 + 2 * T1**4 * T2**4 - 2 * T1**3 * T2**5
    + 3 * T1**2 * T2**6 + T1**6 - 2 * T1**3 * T2**3 + T2**6
)
_H = T1**2 * T2**2 + T1**2 + T1 * T2 + T2**2
_J = 3 * T1**4 * T2**4 + 3 * T1**4 * T2**2 + 3 * T1**2 * T2**4 + T1**4 + T1**2 * T2**2 + T2**4
_K1 = (
    3 * T1**5 * T2**4 + T1**4 * T2**5 + 3 * T1**5 * T2**2 + T1**4 * T2**3 + T1**3 * T2**4
    - T1**2 * T2**5 + T1**5 + T1**4 * T2 + T1**3 * T2**2 - T1**2 * T2**3 - T1 * T2**4 - T2**5
)
_K2 = (
    T1**5 * T2**4 + 3 * T1**4 * T2**5 - T1**5 * T2**2 + T1**4 * T2**3 + T1**3 * T2**4
    + 3 * T1**2 * T2**5 - T1**5 - T1**4 * T2 - T1**3 * T2**2 + T1**2 * T2**3 + T1 * T2**4 + T2**5
)
_L1 = (
    2 * T1**6 * T2**5 + 2 * T1**6 * T2**3 - T1**5 * T2**4 + 3 * T1**4 * T2**5
    - 3 * T1**5 * T2**2 + T1**4 * T2**3 + T1**3 * T2**4 + 3 * T1**2 * T2**5 - T1**5
    - T1**4 * T2 - T1**3 * T2**2 + T1**2 * T2**3 + T1 * T2**4 + T2**5
)
_L2 = (
    2 * T1**5 * T2**6 + 3 * T1**5 * T2**4 - T1**4 * T2**5 + 2 * T1**3 * T2**6
    + 3 * T1**5 * T2**2 + T1**4 * T2**3 + T1**3 * T2**4 - 3 * T1**2 * T2**5 + T1**5
    + T1**4 * T2 + T1**3 * T2**2 - T1**2 * T2**3 - T1 * T2**4 - T2**5
)

RP = FamilyFormula(
    name="family_rp",
    kind=PairKind.COMMON_RP,
    params=(T1, T2),
    first=(
        T1 * (T2**2 + 1) * _F * _G,
        2 * T1 * T2**3 * (T1**2 + 1) ** 2 * (T2**2 + 1) * _H * _K1,
        T1 * (T1 + T2) * (T2**2 + 1) * _J * _L1,
    ),
    second=(
        T2 * (T1**2 + 1) * _F * _G,
        2 * T1**3 * T2 * (T1**2 + 1) * (T2**2 + 1) ** 2 * _H * _K2,
        T2 * (T1 + T2) * (T1**2 + 1) * _J * _L2,
    ),
    circumradius=(T1**2 + 1) * (T2**2 + 1) * _F * _G / 4,
    other=4 * T1**3 * T2**3 * (T1 + T2) * (T1**2 + 1) * (T2**2 + 1) * _H * _J,
)

_P5 = 5 * T1**4 + 6 * T1**3 + 6 * T1**2 + 2 * T1 + 1
_P6 = 13 * T1**6 - 4 * T1**5 + 7 * T1**4 - 4 * T1**3 + 3 * T1**2 + 1
_P2 = 2 * T1**2 + T1 + 1
_P4 = 7 * T1**4 + 4 * T1**2 + 1

RP_RIGHT = FamilyFormula(
    name="family_rp_right",
    kind=PairKind.COMMON_RP,
    params=(T1,),
    first=(
        2 * T1 * _P5 * _P6,
        4 * T1 * (T1**2 + 1) ** 2 * _P2 * (7 * T1**5 + 3 * T1**4 + 2 * T1**3 - 2 * T1**2 - T1 - 1),
        2 * T1 * (T1 + 1) * _P4 * (4 * T1**6 - 5 * T1**5 + 3 * T1**4 + 4 * T1**2 + T1 + 1),
    ),
    second=(
        (T1**2 + 1) * _P5 * _P6,
        -8 * T1**3 * (T1**2 + 1) * _P2 * (T1**5 - 3 * T1**4 - 4 * T1**2 - T1 - 1),
        (T1 + 1) * (T1**2 + 1) * _P4 * (9 * T1**5 + T1**4 + 4 * T1**3 - 4 * T1**2 - T1 - 1),
    ),
    circumradius=(T1**2 + 1) * _P5 * _P6 / 2,
    other=8 * T1**3 * (T1 + 1) * (T1**2 + 1) * _P2 * _P4,
)

# common circumradius and common inradius
_Q = T1**2 * T2**2 + T1**2 - 8 * T1 * T2 + T2**2 + 9
_U1 = T1 * T2**2 - T1 - 2 * T2
_U2 = T1**2 * T2 - 2 * T1 - T2

RR = FamilyFormula(
    name="family_rr",
    kind=PairKind.COMMON_RR,
    params=(T1, T2),
    first=(
        T1 * (T2**2 + 1) * _Q,
        -_U1 * (T1**2 + 1) * (2 * T1 * T2 - T2**2 - 3),
        -2 * (T1**2 * T2**2 - T1**2 - 4 * T1 * T2 + T2**2 + 3) * _U2,
    ),
    second=(
        T2 * (T1**2 + 1) * _Q,
        _U2 * (T2**2 + 1) * (T1**2 - 2 * T1 * T2 + 3),
        -2 * (T1**2 * T2**2 + T1**2 - 4 * T1 * T2 - T2**2 + 3) * _U1,
    ),
    circumradius=(T1**2 + 1) * (T2**2 + 1) * _Q / 4,
    other=2 * _U1 * _U2,
)

RR_RIGHT = FamilyFormula(
    name="family_rr_right",
    kind=PairKind.COMMON_RR,
    params=(T1,),
    first=(
        2 * T1 * (T1**2 - 4 * T1 + 5),
        2 * (T1**2 + 1) * (T1 - 2),
        4 * (T1 - 1) * (T1**2 - 2 * T1 - 1),
    ),
    second=(
        (T1**2 + 1) * (T1**2 - 4 * T1 + 5),
        (T1**2 - 2 * T1 - 1) * (T1**2 - 2 * T1 + 3),
        4 * (T1 - 1) ** 2,
    ),
    circumradius=(T1**2 + 1) * (T1**2 - 4 * T1 + 5) / 2,
    other=2 * (T1**2 - 2 * T1 - 1),
)

# common circumradius and common area
_E1 = T**4 - 2 * T**2 + 5
_E2 = 5 * T**4 - 2 * T**2 + 1
_N8 = T**8 + 8 * T**7 + 20 * T**6 - 56 * T**5 - 26 * T**4 + 56 * T**3 + 20 * T**2 - 8 * T + 1
_D8 = T**8 - 8 * T**7 + 20 * T**6 + 56 * T**5 - 26 * T**4 - 56 * T**3 + 20 * T**2 + 8 * T + 1
_B1 = T**4 - 4 * T**3 + 10 * T**2 - 4 * T + 1
_B2 = T**4 + 4 * T**3 + 10 * T**2 + 4 * T + 1
_C16 = (
    T**16 + 104 * T**14 - 548 * T**12 + 3032 * T**10 - 4922 * T**8 + 3032 * T**6
    - 548 * T**4 + 104 * T**2 + 1
)
_RA_DENOMINATORS = (
    3 * T**4 - 6 * T**2 - 1,
    T**4 + 6 * T**2 - 3,
    T**4 - 4 * T**3 - 6 * T**2 - 4 * T + 1,
    T**4 + 4 * T**3 - 6 * T**2 + 4 * T + 1,
)

RA = FamilyFormula(
    name="family_ra",
    kind=PairKind.COMMON_RA,
    params=(T,),
    first=(
        2 * T * _E1 * _E2 * _N8,
        (T - 1) * (T + 1) * _B1 * _B2 * _D8,
        (T**2 + 1) * _C16,
    ),
    second=(
        (T - 1) * (T + 1) * _B1 * _B2 * _N8,
        2 * T * _E1 * _E2 * _D8,
        (T**2 + 1) * _C16,
    ),
    circumradius=(T**2 + 1) * _E1 * _E2 * _B1 * _B2 * _N8 * _D8 / (2 * sp.Mul(*_RA_DENOMINATORS)),
    other=T * (T - 1) * (T + 1) * sp.Mul(*_RA_DENOMINATORS) * _C16,
    guards=_RA_DENOMINATORS,
)


def family_rp(t1: Any, t2: Any) -> TrianglePair:
    return RP.pair((t1, t2))


def family_rp_right(t1: Any) -> TrianglePair:
    """t2 = 1 specialization: the second triangle is right-angled."""
    return RP_RIGHT.pair((t1,))


def family_rr(t1: Any, t2: Any) -> TrianglePair:
    return RR.pair((t1, t2))


def family_rr_right(t1: Any) -> TrianglePair:
    """t2 = 1 specialization: the second triangle is right-angled."""
    return RR_RIGHT.pair((t1,))


def family_ra(t: Any) -> TrianglePair:
    return RA.pair((t,))


def verify_pair(p: TrianglePair) -> VerificationReport:
    """Recompute both certificates from the raw sides and check every pair invariant."""
    report = VerificationReport(kind=p.kind)
    recomputed: list[HeronCertificate | None] = []
    for label, cert in (("first", p.first), ("second", p.second)):
        fresh = certify_heron(cert.triangle)
        recomputed.append(fresh)
        if fresh is None:
            report.add(f"{label}_heron", False, "area is irrational")
            continue
        report.add(
            f"{label}_heron",
            fresh == cert and all(fresh.identities().values()),
            "stored certificate matches recomputation" if fresh == cert else "stale certificate",
        )
    c1, c2 = recomputed
    if c1 is None or c2 is None:
        report.add("circumradius_equal", False, "a certificate could not be recomputed")
        report.add(f"{p.kind.other_name}_equal", False, "a certificate could not be recomputed")
    else:
        report.add(
            "circumradius_equal",
            c1.circumradius == c2.circumradius == p.shared_circumradius,
            f"{format_rational(c1.circumradius)} vs {format_rational(c2.circumradius)}",
        )
        o1, o2 = p.kind.other_of(c1), p.kind.other_of(c2)
        report.add(
            f"{p.kind.other_name}_equal",
            o1 == o2 == p.shared_other,
            f"{format_rational(o1)} vs {format_rational(o2)}",
        )
    s1, s2 = p.first.triangle.sorted_sides(), p.second.triangle.sorted_sides()
    report.add("non_congruent", s1 != s2)
    if p.kind is PairKind.COMMON_RA:
        # necessary conditions for a common circumradius and area
        first_sides, second_sides = p.first.triangle.sides, p.second.triangle.sides
        report.add("side_products_equal", math.prod(first_sides) == math.prod(second_sides))
        report.add(
            "heron_products_equal",
            heron_product(*first_sides) == heron_product(*second_sides),
        )
    if not report.ok:
        logger.info("pair verification failed", extra={"kind": p.kind.value, "failed": report.failed()})
    return report
