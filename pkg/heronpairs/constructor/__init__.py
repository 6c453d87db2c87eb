"""Constructive machinery: cubic curves, the chord/tangent process and Fermat's quartic descent."""

from heronpairs.constructor.curves import (
    CurvePoint,
    PlaneCubic,
    chord_third_point,
    cubic_rp,
    cubic_rr,
    descend_further,
    rp_base_point,
    rr_base_point,
    tangent_third_point,
)
from heronpairs.constructor.quartic import (
    QuarticPoly,
    fermat_closed_form_u,
    fermat_iterate,
    fermat_quartic_step,
    quartic_ra,
)
from heronpairs.constructor.solvers import (
    descend_ra,
    descend_rp,
    descend_rr,
    pair_from_ra_u,
    pair_from_rp_point,
    pair_from_rr_point,
    solve_ra,
    solve_ra_iterate,
    solve_rp,
    solve_rr,
)

__all__ = [
    "CurvePoint",
    "PlaneCubic",
    "QuarticPoly",
    "chord_third_point",
    "cubic_rp",
    "cubic_rr",
    "descend_further",
    "descend_ra",
    "descend_rp",
    "descend_rr",
    "fermat_closed_form_u",
    "fermat_iterate",
    "fermat_quartic_step",
    "pair_from_ra_u",
    "pair_from_rp_point",
    "pair_from_rr_point",
    "quartic_ra",
    "rp_base_point",
    "rr_base_point",
    "solve_ra",
    "solve_ra_iterate",
    "solve_rp",
    "solve_rr",
    "tangent_third_point",
]
