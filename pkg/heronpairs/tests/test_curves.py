"""Tests for constructor/curves: plane cubics, tangent and chord moves, descent."""

from fractions import Fraction as F
from random import Random

import pytest

from heronpairs.constructor.curves import (
    Y1,
    Y2,
    CurvePoint,
    PlaneCubic,
    chord_third_point,
    cubic_rp,
    cubic_rr,
    descend_further,
    rp_base_point,
    rr_base_point,
    tangent_direction,
    tangent_third_point,
)
from heronpairs.core.errors import (
    DegeneracyError,
    DegenerateChord,
    DegenerateParam,
    Exhausted,
    InflectionOrDegenerate,
    NotOnCurve,
    SingularPoint,
)


def test_cubic_rr_coefficients():
    expected = PlaneCubic.from_expr(
        17 * Y1**2 * Y2 - 8 * Y1 * Y2**2 - 17 * Y1**2 + 2 * Y2**2 - 8 * Y1 + 17 * Y2 - 15
    )
    assert cubic_rr(4, 1, 1) == expected


def test_plane_cubic_validation():
    with pytest.raises(ValueError):
        PlaneCubic({(4, 0): 1})
    with pytest.raises(ValueError):
        PlaneCubic({(2, 0): 1, (0, 1): 1})
    assert PlaneCubic({(3, 0): 1, (1, 1): 0}).coefficients == {(3, 0): 1}


def test_base_points_lie_on_curves():
    assert rr_base_point(4, 1, 1) == CurvePoint(1, 4)
    assert cubic_rr(4, 1, 1).contains(CurvePoint(1, 4))
    assert cubic_rp(2, 3, 1).contains(rp_base_point(2, 3, 1))
    assert rp_base_point(2, 3, 1) == CurvePoint(F(-1, 8), F(-1, 18))


def test_zero_parameters_rejected():
    with pytest.raises(DegenerateParam) as exc:
        cubic_rr(0, 1, 1)
    assert exc.value.factor == "t1"
    with pytest.raises(DegenerateParam):
        cubic_rp(1, 2, 0)


def test_tangent_third_point_rr_4_1():
    curve = cubic_rr(4, 1, 1)
    point = tangent_third_point(curve, CurvePoint(1, 4))
    assert point == CurvePoint(2, F(11, 7))
    assert curve(point) == 0


def test_tangent_line_has_double_root_at_base():
    curve = cubic_rr(4, 1, 1)
    base = CurvePoint(1, 4)
    c0, c1, c2, c3 = curve.restrict_to_line(base, tangent_direction(curve, base))
    assert c0 == 0 and c1 == 0
    assert c3 != 0


def test_chord_along_tangent_returns_base():
    curve = cubic_rr(4, 1, 1)
    assert chord_third_point(curve, CurvePoint(1, 4), CurvePoint(2, F(11, 7))) == CurvePoint(1, 4)


def test_chord_errors():
    curve = cubic_rr(4, 1, 1)
    with pytest.raises(DegenerateChord):
        chord_third_point(curve, CurvePoint(1, 4), CurvePoint(1, 4))
    with pytest.raises(NotOnCurve):
        chord_third_point(curve, CurvePoint(1, 4), CurvePoint(0, 0))


def test_tangent_off_curve():
    with pytest.raises(NotOnCurve):
        tangent_third_point(cubic_rr(4, 1, 1), CurvePoint(0, 0))


def test_flex_and_singular_points():
    flex_curve = PlaneCubic.from_expr(Y1**3 - Y2)
    with pytest.raises(InflectionOrDegenerate):
        tangent_third_point(flex_curve, CurvePoint(0, 0))
    nodal = PlaneCubic.from_expr(Y2**2 - Y1**2 * (Y1 + 1))
    with pytest.raises(SingularPoint):
        tangent_third_point(nodal, CurvePoint(0, 0))


def test_equal_parameters_make_the_tangent_degenerate():
    with pytest.raises((InflectionOrDegenerate, SingularPoint)):
        tangent_third_point(cubic_rp(2, 2, 1), rp_base_point(2, 2, 1))


def test_descend_further_rr_4_1():
    curve = cubic_rr(4, 1, 1)
    points = descend_further(curve, [CurvePoint(1, 4)], 2)
    assert points == [CurvePoint(2, F(11, 7)), CurvePoint(F(1737, 1208), F(10671, 6191))]
    assert all(curve.contains(p) for p in points)


def test_descend_further_zero_steps_and_exhaustion():
    curve = cubic_rr(4, 1, 1)
    assert descend_further(curve, [CurvePoint(1, 4)], 0) == []
    with pytest.raises(Exhausted):
        descend_further(PlaneCubic.from_expr(Y1**3 - Y2), [CurvePoint(0, 0)], 1)
    with pytest.raises(ValueError):
        descend_further(curve, [CurvePoint(1, 4)], -1)


def _small(rng):
    return F(rng.randint(-9, 9) or 2, rng.randint(1, 9))


def test_random_tangent_and_chord_extractions():
    rng = Random(5)
    successes = 0
    for i in range(100):
        t1, t2, m = _small(rng), _small(rng), _small(rng)
        if i % 2:
            curve, base = cubic_rp(t1, t2, m), rp_base_point(t1, t2, m)
        else:
            curve, base = cubic_rr(t1, t2, m), rr_base_point(t1, t2, m)
        try:
            p1 = tangent_third_point(curve, base)
            assert curve(p1) == 0
            c0, c1, _, _ = curve.restrict_to_line(base, tangent_direction(curve, base))
            assert c0 == c1 == 0
            p2 = tangent_third_point(curve, p1)
            p3 = chord_third_point(curve, base, p2)
            assert curve(p3) == 0
        except DegeneracyError:
            continue
        successes += 1
    assert successes >= 50
