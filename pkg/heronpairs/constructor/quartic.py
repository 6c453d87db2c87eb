"""Quartics in one variable and Fermat's completing-the-square descent."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import sympy as sp

from heronpairs.core.errors import DegenerateParam, DescentStuck, NotASquareAtBase
from heronpairs.core.rationals import as_rational, format_rational, to_sympy
from heronpairs.exact_geometry import rational_sqrt

logger = logging.getLogger(__name__)

U = sp.Symbol("u")


@dataclass(frozen=True)
class QuarticPoly:
    """q(u) = q4 u^4 + q3 u^3 + q2 u^2 + q1 u + q0 with q4 != 0."""

    q0: Fraction
    q1: Fraction
    q2: Fraction
    q3: Fraction
    q4: Fraction

    def __post_init__(self) -> None:
        for name in ("q0", "q1", "q2", "q3", "q4"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if self.q4 == 0:
            raise ValueError("leading coefficient q4 must be nonzero")

    @property
    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        """Ascending order: (q0, q1, q2, q3, q4)."""
        return (self.q0, self.q1, self.q2, self.q3, self.q4)

    def __call__(self, u: Any) -> Fraction:
        u = as_rational(u)
        value = Fraction(0)
        for c in reversed(self.coefficients):
            value = value * u + c
        return value

    def as_poly(self) -> sp.Poly:
        return sp.Poly([to_sympy(c) for c in reversed(self.coefficients)], U, domain="QQ")

    def shifted(self, u0: Any) -> QuarticPoly:
        """Q(s) = q(u0 + s)."""
        coeffs = self.as_poly().shift(to_sympy(u0)).all_coeffs()
        return QuarticPoly(*(as_rational(c) for c in reversed(coeffs)))

    def square_root_at(self, u: Any) -> Fraction | None:
        value = self(u)
        if value < 0:
            return None
        return rational_sqrt(value)


def quartic_ra(t: Any) -> QuarticPoly:
    """Square condition on the area of the common-R, common-A pair, as a quartic in u."""
    t = as_rational(t)
    if t in (0, 1, -1):
        raise DegenerateParam(f"t = {format_rational(t)} is excluded", factor="t*(t-1)*(t+1)")
    k = (t + 1) ** 2 * (t - 1) ** 2 * t**2
    ell = (t**2 + 2 * t - 1) * (t**2 - 2 * t - 1) * (t - 1) * (t + 1) * t
    return QuarticPoly(q0=-k, q1=-ell, q2=6 * k, q3=ell, q4=-k)


def fermat_closed_form_u(t: Any) -> Fraction:
    """Published value of the first descent step from u = 1."""
    t = as_rational(t)
    num = t**8 + 8 * t**7 + 20 * t**6 - 56 * t**5 - 26 * t**4 + 56 * t**3 + 20 * t**2 - 8 * t + 1
    den = t**8 - 8 * t**7 + 20 * t**6 + 56 * t**5 - 26 * t**4 - 56 * t**3 + 20 * t**2 + 8 * t + 1
    return num / den


def fermat_quartic_step(q: QuarticPoly, u0: Any) -> Fraction:
    """New u1 != u0 with q(u1) a rational square, given q(u0) = w^2 != 0.

    With Q(s) = q(u0 + s), pick R(s) = r0 + r1 s + r2 s^2 agreeing with Q to
    order two; Q - R^2 then factors as s^3 * (linear), whose root is the step.
    """
    u0 = as_rational(u0)
    w = q.square_root_at(u0)
    if not w:
        raise NotASquareAtBase(
            f"q({format_rational(u0)}) = {format_rational(q(u0))} is not a nonzero square",
            factor="q(u0)",
        )
    shifted = q.shifted(u0)
    _, c1, c2, c3, c4 = shifted.coefficients
    for r0 in (w, -w):
        r1 = c1 / (2 * r0)
        r2 = (c2 - r1**2) / (2 * r0)
        den = c4 - r2**2
        if den == 0:
            continue
        s = -(c3 - 2 * r1 * r2) / den
        if s != 0:
            return _accept(u0, s, "low-order match")
    # matching the constant, linear and leading terms instead needs c4 to be a square
    k = rational_sqrt(c4) if c4 > 0 else None
    if k:
        for r0 in (w, -w):
            r1 = c1 / (2 * r0)
            for lead in (k, -k):
                den = c3 - 2 * r1 * lead
                if den == 0:
                    continue
                s = -(c2 - r1**2 - 2 * r0 * lead) / den
                if s != 0:
                    return _accept(u0, s, "leading-term match")
    raise DescentStuck(
        f"no completing-the-square variant moves off u = {format_rational(u0)}", factor="descent"
    )


def _accept(u0: Fraction, s: Fraction, variant: str) -> Fraction:
    u1 = u0 + s
    logger.debug(
        "fermat step", extra={"u0": u0, "u1": u1, "variant": variant}
    )
    return u1


def fermat_iterate(q: QuarticPoly, u0: Any, steps: int) -> list[Fraction]:
    """Distinct values after u0, each from the previous one; stops early when stuck."""
    if steps < 0:
        raise ValueError("steps must be non-negative")
    current = as_rational(u0)
    seen = {current}
    out: list[Fraction] = []
    for _ in range(steps):
        try:
            nxt = fermat_quartic_step(q, current)
        except DescentStuck as exc:
            logger.info("fermat descent stuck: %s", exc)
            break
        if nxt in seen:
            logger.info("fermat descent repeated u = %s", format_rational(nxt))
            break
        seen.add(nxt)
        out.append(nxt)
        current = nxt
    return out
