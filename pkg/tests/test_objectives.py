"""Objective formulas, gradients, boundary restrictions and reductions."""

import math
import random
from fractions import Fraction

import pytest

from grunsky_bounds.domain import CONSTANTS, EdgeId, cap_sup_up, lemma1_bound
from grunsky_bounds.interval import Interval
from grunsky_bounds.objectives import (
    F1_FORM,
    F2_REDUCED_POLY,
    OBJECTIVES,
    BoundaryRestrictionId,
    ObjectiveId,
    eval_boundary,
    eval_objective,
    f2_constraint_curve_x,
    f4_h1,
    f6_h2,
    grad,
    monotone_bounds,
)
from grunsky_bounds.optimize import (
    _newton_polish,
    find_root_1d,
    prove_negative_1d,
    prove_positive_1d,
)
from grunsky_bounds.poly import rp_eval_iv

A = CONSTANTS.a_float
B = CONSTANTS.b
D = CONSTANTS.d
S3, S5, S7 = math.sqrt(3), math.sqrt(5), math.sqrt(7)


def in_window(value: float, lo: float) -> bool:
    return lo <= value < lo + 1e-3


# ---------------------------------------------------------------------------
# point evaluation
# ---------------------------------------------------------------------------


def test_registered_rational_coefficients():
    f4 = OBJECTIVES[ObjectiveId.F4]
    assert f4.poly[(3, 0)] == Fraction(4, 99)
    assert f4.poly[(1, 1)] == Fraction(982, 297)
    f5 = OBJECTIVES[ObjectiveId.F5]
    assert f5.poly[(4, 0)] == Fraction(115, 297)
    assert f5.poly[(2, 1)] == Fraction(388, 99)
    assert f5.m5l == Fraction(982, 297)


def test_eval_f1_endpoints():
    assert abs(eval_objective(ObjectiveId.F1, 0.0) - 2.0 / S3) <= 1e-15
    assert in_window(eval_objective(ObjectiveId.F1, A), 2.427)


def test_eval_f6_interior_critical_value_is_rational():
    x = math.sqrt(11.0 / 30.0)
    y = math.sqrt(281.0 / 2.0) / 30.0
    assert abs(eval_objective(ObjectiveId.F6, x, y) - 1079.0 / 900.0) <= 1e-10


def test_eval_f7_corner():
    assert in_window(eval_objective(ObjectiveId.F7, A, D), 0.662)


def test_eval_f8_near_edge_root():
    assert in_window(eval_objective(ObjectiveId.F8, A, 0.267), 0.551)


def test_eval_rejects_points_outside_region():
    with pytest.raises(ValueError):
        OBJECTIVES[ObjectiveId.F2].value(0.5, 0.7)


# ---------------------------------------------------------------------------
# gradients
# ---------------------------------------------------------------------------


def _fd_gradient(oid: ObjectiveId, x: float, y: float, h: float = 1e-6):
    f = OBJECTIVES[oid].value
    return (
        (f(x + h, y) - f(x - h, y)) / (2 * h),
        (f(x, y + h) - f(x, y - h)) / (2 * h),
    )


def _interior_points(n: int, seed: int = 5):
    rng = random.Random(seed)
    pts = []
    while len(pts) < n:
        x = rng.uniform(0.01, A - 0.01)
        cap = lemma1_bound(x)
        y = rng.uniform(0.01, cap - 0.01)
        if 1 - x * x - 3 * y * y > 0.05:
            pts.append((x, y))
    return pts


@pytest.mark.parametrize("oid", [o for o in ObjectiveId if o is not ObjectiveId.F1])
def test_gradient_matches_finite_differences(oid):
    for x, y in _interior_points(100):
        g = grad(oid, x, y)
        fx, fy = _fd_gradient(oid, x, y)
        assert abs(g.dx - fx) <= 1e-5 * max(1.0, abs(g.dx))
        assert abs(g.dy - fy) <= 1e-5 * max(1.0, abs(g.dy))


def test_gradient_f2_tight_agreement():
    for x, y in _interior_points(100, seed=11):
        g = grad(ObjectiveId.F2, x, y)
        fx, fy = _fd_gradient(ObjectiveId.F2, x, y)
        assert abs(g.dx - fx) <= 1e-6 * max(1.0, abs(g.dx))
        assert abs(g.dy - fy) <= 1e-6 * max(1.0, abs(g.dy))


def test_gradient_f1_vanishes_at_origin():
    assert grad(ObjectiveId.F1, 0.0).dx == 0.0


def test_gradient_f6_dy_vanishes_on_axis():
    for x in (0.1, 0.3, 0.6, 0.7):
        assert grad(ObjectiveId.F6, x, 0.0).dy == 0.0


def test_gradient_singular_on_rim():
    with pytest.raises(ArithmeticError):
        OBJECTIVES[ObjectiveId.F2].gradient(0.5, math.sqrt((1 - 0.25) / 3))


def test_scaled_gradient_sign_matches_gradient():
    for x, y in _interior_points(50, seed=3):
        for oid in (ObjectiveId.F2, ObjectiveId.F5, ObjectiveId.F6):
            g = grad(oid, x, y)
            s1, s2 = OBJECTIVES[oid].scaled_gradient(x, y)
            assert math.copysign(1, g.dx) == math.copysign(1, s1) or abs(g.dx) < 1e-12
            assert math.copysign(1, g.dy) == math.copysign(1, s2) or abs(g.dy) < 1e-12


# ---------------------------------------------------------------------------
# interval evaluation: inclusion and monotone bounds
# ---------------------------------------------------------------------------


def test_value_iv_contains_point_values():
    rng = random.Random(41)
    for _ in range(300):
        oid = rng.choice([o for o in ObjectiveId if o is not ObjectiveId.F1])
        obj = OBJECTIVES[oid]
        x1 = rng.uniform(0, A - 0.02)
        x2 = x1 + rng.uniform(0, min(0.2, A - x1))
        cap = min(lemma1_bound(x1), lemma1_bound(x2))
        y1 = rng.uniform(0, cap * 0.8)
        y2 = min(y1 + rng.uniform(0, 0.2), cap)
        iv = obj.value_iv(Interval(x1, x2), Interval(y1, y2))
        for _ in range(5):
            x = rng.uniform(x1, x2)
            y = rng.uniform(y1, min(y2, lemma1_bound(x)))
            v = obj.value(x, y)
            assert iv.lo - 1e-12 <= v <= iv.hi + 1e-12


def test_monotone_bounds_agree_with_interval_evaluation():
    rng = random.Random(17)
    for _ in range(200):
        oid = rng.choice([o for o in ObjectiveId if o is not ObjectiveId.F1])
        obj = OBJECTIVES[oid]
        mb = monotone_bounds(oid)
        x1 = rng.uniform(0, A - 0.05)
        x2 = x1 + rng.uniform(0, 0.05)
        cap = min(lemma1_bound(x1), lemma1_bound(x2))
        y1 = rng.uniform(0, cap * 0.9)
        y2 = min(y1 + rng.uniform(0, 0.05), cap)
        iv = obj.value_iv(Interval(x1, x2), Interval(y1, y2))
        lo = mb.lower(x1, x2, y1, y2)
        hi = mb.upper(x1, x2, y1, y2)
        # both are enclosures of the same range; each must cover point samples
        for _ in range(3):
            x = rng.uniform(x1, x2)
            y = rng.uniform(y1, min(y2, lemma1_bound(x)))
            v = obj.value(x, y)
            assert lo - 1e-12 <= v <= hi + 1e-12
        assert hi >= iv.lo - 1e-9 and lo <= iv.hi + 1e-9


# ---------------------------------------------------------------------------
# boundary restrictions against independently transcribed closed forms
# ---------------------------------------------------------------------------

INV_A = 1.0 / A

CLOSED_FORMS = {
    BoundaryRestrictionId.G1: lambda x: 3 * x + 7 * x**3 + math.sqrt(max(1 - 10 * x * x - 3 * x**4, 0.0)) / S5,
    BoundaryRestrictionId.G2: lambda x: 4 * x**3 + 2 * S3 * x * math.sqrt(1 - x * x),
    BoundaryRestrictionId.G3: lambda x: (21 * S5 * x + 5 * S7) / 35 * math.sqrt(max(1 - 10 * x * x - 3 * x**4, 0.0))
    + (3 + 30 * x * x + 47 * x**4) / 4,
    BoundaryRestrictionId.G4: lambda x: 1 - x * x + 5 * x**4 + 4 * x * x * math.sqrt(3 * (1 - x * x)),
    BoundaryRestrictionId.G5: lambda x: math.sqrt(max(5 - 50 * x * x - 15 * x**4, 0.0)) / 5
    - x * ((1 - 2 * INV_A) * x * x - 3 + INV_A),
    # the printed form of this restriction drops the factor x from its first
    # term; the substituted parent formula (used here) reproduces the quoted
    # maximum 0.969... at 0.715..., the printed variant does not
    BoundaryRestrictionId.G6: lambda x: 2 * (1 - INV_A / 3) * x * math.sqrt(3 * (1 - x * x))
    + (3 * INV_A - 4) * x**3,
    BoundaryRestrictionId.G7: lambda x: (1 / S7 + (3 - INV_A) / S5 * x)
    * math.sqrt(max(1 - 10 * x * x - 3 * x**4, 0.0))
    + (3 + 30 * x * x + 7 * x**4) / 4
    + INV_A * (x**4 - 3 * x * x),
    BoundaryRestrictionId.G8: lambda x: 2 * (2 - INV_A) * x * x * math.sqrt(3 * (1 - x * x))
    + 1
    - x * x
    + (4 * INV_A - 5) * x**4,
    BoundaryRestrictionId.G9: lambda x: x**4 + (1 + x * x) ** 2
    + 2 / S5 * x * math.sqrt(max(1 - 10 * x * x - 3 * x**4, 0.0)),
    BoundaryRestrictionId.G10: lambda x: x**4 + 4.0 / 3.0 * (1 - x * x),
}


def _edge_grid(rid: BoundaryRestrictionId, n: int = 50) -> list[float]:
    # stop a sliver short of b on the low curve: the shared radicand vanishes
    # exactly there and sqrt amplifies float noise in the reference transcription
    if rid.edge is EdgeId.CURVE_LOW:
        lo, hi = 0.0, B * (1 - 1e-6)
    else:
        lo, hi = B, A
    return [lo + (hi - lo) * k / n for k in range(n + 1)]


@pytest.mark.parametrize("rid", list(BoundaryRestrictionId))
def test_restriction_matches_closed_form(rid):
    for x in _edge_grid(rid):
        assert abs(eval_boundary(rid, x) - CLOSED_FORMS[rid](x)) <= 1e-12


@pytest.mark.parametrize("rid", list(BoundaryRestrictionId))
def test_restriction_matches_parent_on_edge(rid):
    parent = OBJECTIVES[rid.parent]
    for x in _edge_grid(rid):
        if rid.edge is EdgeId.CURVE_LOW:
            y = 0.5 * (1 + x * x)
        else:
            # upward-rounded cap: the parent's radicand is then certainly <= 0
            # and clamps, matching the identically-zero radical on this curve
            y = cap_sup_up(x, x)
        assert abs(eval_boundary(rid, x) - parent.value(x, y)) <= 1e-12


STRAIGHT_EDGE_FORMS = {
    (ObjectiveId.F2, EdgeId.X_ZERO): lambda t: 2 / S5 * math.sqrt(1 - 3 * t * t),
    (ObjectiveId.F2, EdgeId.X_A): lambda t: 4 * A**3 + 6 * A * t + 2 / S5 * math.sqrt(max(1 - A * A - 3 * t * t, 0.0)),
    (ObjectiveId.F2, EdgeId.Y_ZERO): lambda t: 4 * t**3 + 2 / S5 * math.sqrt(1 - t * t),
    (ObjectiveId.F3, EdgeId.X_ZERO): lambda t: 3 * t * t + 2 / S7 * math.sqrt(1 - 3 * t * t),
    (ObjectiveId.F3, EdgeId.Y_ZERO): lambda t: 5 * t**4 + (6 * t / S5 + 2 / S7) * math.sqrt(1 - t * t),
    (ObjectiveId.F4, EdgeId.X_ZERO): lambda t: 2 / S5 * math.sqrt(1 - 3 * t * t),
    (ObjectiveId.F4, EdgeId.Y_ZERO): lambda t: (3 * INV_A - 4) * t**3 + 2 / S5 * math.sqrt(1 - t * t),
    (ObjectiveId.F5, EdgeId.X_ZERO): lambda t: 3 * t * t + 2 / S7 * math.sqrt(1 - 3 * t * t),
    (ObjectiveId.F5, EdgeId.Y_ZERO): lambda t: (4 * INV_A - 5) * t**4
    + (2 / S7 + (6 - 2 * INV_A) / S5 * t) * math.sqrt(1 - t * t),
    (ObjectiveId.F6, EdgeId.X_ZERO): lambda t: 4 * t * t,
    (ObjectiveId.F6, EdgeId.Y_ZERO): lambda t: t**4 + 4 / S5 * t * math.sqrt(1 - t * t),
}


@pytest.mark.parametrize("key", sorted(STRAIGHT_EDGE_FORMS, key=str))
def test_straight_edge_restrictions(key):
    oid, edge = key
    form = OBJECTIVES[oid].restriction(edge)
    # the x=a edge radicand vanishes at y=d; stay a sliver inside
    hi = {EdgeId.X_ZERO: 0.5, EdgeId.X_A: D * (1 - 1e-6), EdgeId.Y_ZERO: A}[edge]
    for k in range(51):
        t = hi * k / 50
        assert abs(form.value(t) - STRAIGHT_EDGE_FORMS[key](t)) <= 1e-12


def test_restriction_interval_contains_point_values():
    rng = random.Random(8)
    for oid in (ObjectiveId.F2, ObjectiveId.F5, ObjectiveId.F6):
        for edge in EdgeId:
            form = OBJECTIVES[oid].restriction(edge)
            for _ in range(20):
                t1 = rng.uniform(form.lo, form.hi)
                t2 = rng.uniform(t1, min(form.hi, t1 + 0.05))
                iv = form.value_iv(Interval(t1, t2))
                t = rng.uniform(t1, t2)
                assert iv.lo - 1e-12 <= form.value(t) <= iv.hi + 1e-12


# ---------------------------------------------------------------------------
# critical-point reductions
# ---------------------------------------------------------------------------


def test_f2_reduction_combination_is_division_free_polynomial():
    # 3y f_x - x f_y = 18y^2 + 36x^2 y - 6x^2 for the fourth-coefficient objective
    obj = OBJECTIVES[ObjectiveId.F2]
    for x, y in _interior_points(30, seed=21):
        expected = 18 * y * y + 36 * x * x * y - 6 * x * x
        assert abs(obj.reduction_residual(x, y) - expected) <= 1e-12


def test_f2_constraint_curve_leaves_region():
    root = find_root_1d(lambda t: rp_eval_iv(F2_REDUCED_POLY, t), 0.0, 1.0 / 6.0, tol=1e-13)
    assert 0.153 <= root.lo <= root.hi < 0.154
    x = f2_constraint_curve_x(root.mid)
    assert 0.961 <= x < 0.962
    assert x > A


def test_f2_constraint_curve_domain_error():
    with pytest.raises(ValueError):
        f2_constraint_curve_x(0.2)


def test_f4_h1_reaches_reported_critical_point():
    obj = OBJECTIVES[ObjectiveId.F4]
    polished = _newton_polish(obj, 0.634, 0.358)
    assert polished is not None
    px, py = polished
    assert 0.634 <= px < 0.635 and 0.358 <= py < 0.359
    assert abs(obj.reduction_residual(px, py)) <= 1e-10
    assert abs(f4_h1(py) - px) <= 1e-9


def test_f6_reduction_and_h2():
    x13 = math.sqrt(11.0 / 30.0)
    y13 = f6_h2(x13)
    assert abs(y13 - math.sqrt(281.0 / 2.0) / 30.0) <= 1e-15
    assert 0.395 <= y13 < 0.396
    obj = OBJECTIVES[ObjectiveId.F6]
    assert abs(obj.reduction_residual(x13, y13)) <= 1e-10
    g = grad(ObjectiveId.F6, x13, y13)
    assert abs(g.dx) <= 1e-10 and abs(g.dy) <= 1e-10


def test_f6_cubic_roots():
    from grunsky_bounds.objectives import F6_CUBIC
    from grunsky_bounds.poly import rp_eval_float

    assert rp_eval_float(F6_CUBIC, 0.0) == 0.0
    x13 = math.sqrt(11.0 / 30.0)
    assert abs(rp_eval_float(F6_CUBIC, x13)) <= 1e-15
    assert 0.605 <= x13 < 0.606
    assert rp_eval_float(F6_CUBIC, 0.3) < 0 < rp_eval_float(F6_CUBIC, 0.7)


# ---------------------------------------------------------------------------
# monotonicity along edges, proved by interval sign tests
# ---------------------------------------------------------------------------


def test_f1_strictly_increasing():
    # grid sign check of the derivative
    for k in range(1, 1001):
        x = A * k / 1000
        r = 1 - x * x
        assert 6 * x - 2 / S3 * x / math.sqrt(r) > 0
    # interval proof on [1e-6, a] through the scaled derivative
    deriv = F1_FORM.scaled_derivative()
    assert prove_positive_1d(deriv.value_iv, 1e-6, CONSTANTS.iv_a.lo)


MONOTONE_CASES = [
    # (objective, edge, lo, hi, direction); the y=0 restriction of the
    # fourth-coefficient objective dips to a minimum near x = 0.075 before
    # rising, so its increase is provable only to the right of the dip --
    # the endpoint bound f(x,0) <= f(a,0) is checked separately below
    (ObjectiveId.F2, EdgeId.Y_ZERO, 0.08, CONSTANTS.iv_a.lo, "up"),
    (ObjectiveId.F4, EdgeId.Y_ZERO, 1e-6, CONSTANTS.iv_a.lo, "down"),
    (ObjectiveId.F2, EdgeId.CURVE_HIGH, CONSTANTS.iv_b.hi, CONSTANTS.iv_a.lo, "up"),
    (ObjectiveId.F3, EdgeId.CURVE_HIGH, CONSTANTS.iv_b.hi, CONSTANTS.iv_a.lo, "up"),
    (ObjectiveId.F5, EdgeId.CURVE_HIGH, CONSTANTS.iv_b.hi, CONSTANTS.iv_a.lo, "up"),
    (ObjectiveId.F3, EdgeId.X_ZERO, 1e-6, 0.5, "up"),
    (ObjectiveId.F5, EdgeId.X_ZERO, 1e-6, 0.5, "up"),
    (ObjectiveId.F2, EdgeId.X_ZERO, 1e-6, 0.5 - 1e-9, "down"),
    (ObjectiveId.F6, EdgeId.Y_ZERO, 1e-6, CONSTANTS.iv_a.lo, "up"),
]


@pytest.mark.parametrize("oid,edge,lo,hi,direction", MONOTONE_CASES)
def test_edge_monotonicity(oid, edge, lo, hi, direction):
    deriv = OBJECTIVES[oid].restriction(edge).scaled_derivative()
    if direction == "up":
        assert prove_positive_1d(deriv.value_iv, lo, hi)
    else:
        assert prove_negative_1d(deriv.value_iv, lo, hi)


def test_f2_axis_maximum_at_right_endpoint():
    # the value bound that the loose monotonicity statement is used for
    from grunsky_bounds.claims import analyze_edge
    from grunsky_bounds.optimize import BnBConfig

    an = analyze_edge(ObjectiveId.F2, EdgeId.Y_ZERO, BnBConfig(tol_value=1e-6))
    assert 2.236 <= an.value.lo <= an.value.hi < 2.237
    assert Fraction(an.argmax.lo) <= CONSTANTS.a <= Fraction(an.argmax.hi)
    # the dip: a genuine interior stationary point below the endpoint value
    interior = an.interior_clusters()
    assert len(interior) == 1 and 0.07 < interior[0].mid < 0.08


def test_values_finite_on_whole_region_including_rim():
    rng = random.Random(30)
    for _ in range(200):
        oid = rng.choice([o for o in ObjectiveId if o is not ObjectiveId.F1])
        x = rng.uniform(0, A)
        y = lemma1_bound(x) if rng.random() < 0.5 else rng.uniform(0, lemma1_bound(x))
        v = OBJECTIVES[oid].value(x, y)
        assert math.isfinite(v)
