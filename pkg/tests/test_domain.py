"""Region constants, cap curve, membership and edge parameterization."""

import math
from fractions import Fraction

import pytest

from grunsky_bounds.domain import (
    CONSTANTS,
    REGION,
    EdgeId,
    cap_point_down,
    cap_sup_up,
    lemma1_bound,
    lemma1_bound_iv,
    omega_contains,
)
from grunsky_bounds.interval import Interval

A = CONSTANTS.a_float
B = CONSTANTS.b
D = CONSTANTS.d


def test_constant_a_is_exact_rational():
    assert CONSTANTS.a == Fraction(297, 400)
    assert float(CONSTANTS.a) == 0.7425


def test_constant_windows():
    assert 0.311 <= CONSTANTS.iv_b.lo <= CONSTANTS.iv_b.hi <= 0.312
    assert 0.386 <= CONSTANTS.iv_d.lo <= CONSTANTS.iv_d.hi <= 0.387


def test_constant_enclosures_tight():
    assert CONSTANTS.iv_b.width <= 1e-15
    assert CONSTANTS.iv_d.width <= 1e-15
    assert CONSTANTS.iv_a.width <= math.ulp(A)


def test_curves_cross_exactly_at_b():
    # (1 + b^2)/2 = sqrt((1 - b^2)/3), equivalently 3u^2 + 10u - 1 = 0 at u = b^2
    low = 0.5 * (1.0 + B * B)
    high = math.sqrt((1.0 - B * B) / 3.0)
    assert abs(low - high) <= 1e-12
    assert abs(1.0 - 10.0 * B * B - 3.0 * B**4) <= 1e-12


def test_lemma1_bound_values():
    assert lemma1_bound(0.0) == 0.5
    both = (0.5 * (1 + B * B), math.sqrt((1 - B * B) / 3))
    assert abs(both[0] - both[1]) <= 1e-12
    assert abs(lemma1_bound(B) - both[0]) <= 1e-12
    assert 0.386 <= lemma1_bound(A) <= 0.387  # = d
    assert abs(lemma1_bound(A) - D) <= 1e-15


def test_lemma1_bound_range_check():
    with pytest.raises(ValueError):
        lemma1_bound(-0.1)
    with pytest.raises(ValueError):
        lemma1_bound(1.5)


def test_lemma1_bound_continuity_on_grid():
    # no branch jump anywhere, in particular across b
    prev = lemma1_bound(0.0)
    n = 2000
    for i in range(1, n + 1):
        x = A * i / n
        cur = lemma1_bound(x)
        assert abs(cur - prev) < 1e-3
        prev = cur


def test_lemma1_bound_iv_contains_pointwise_values():
    for x1, x2 in ((0.0, 0.1), (0.25, 0.35), (0.3, 0.6), (0.7, 0.7425)):
        iv = lemma1_bound_iv(Interval(x1, x2))
        for k in range(11):
            x = x1 + (x2 - x1) * k / 10
            assert iv.lo - 1e-15 <= lemma1_bound(x) <= iv.hi + 1e-15


def test_scalar_cap_helpers_bracket_cap():
    for x in (0.0, 0.1, B, 0.5, A):
        assert cap_point_down(x) <= lemma1_bound(x) <= cap_sup_up(x, x)


def test_omega_contains_examples():
    assert omega_contains(0.0, 0.0)
    assert omega_contains(A, D)  # boundary point of the high curve
    assert not omega_contains(0.5, 0.7)  # cap at 0.5 is exactly 0.5
    assert abs(lemma1_bound(0.5) - 0.5) <= 1e-15
    assert not omega_contains(A + 1e-6, 0.1)
    assert not omega_contains(0.1, -1e-6)


def test_edge_point_examples():
    assert REGION.edge_point(EdgeId.X_A, 0.0) == (A, 0.0)
    x, y = REGION.edge_point(EdgeId.CURVE_HIGH, 1.0)
    assert abs(x - A) <= 1e-15 and abs(y - D) <= 1e-12
    low_end = REGION.edge_point(EdgeId.CURVE_LOW, 1.0)
    high_start = REGION.edge_point(EdgeId.CURVE_HIGH, 0.0)
    assert abs(low_end[0] - high_start[0]) <= 1e-15
    assert abs(low_end[1] - high_start[1]) <= 1e-12  # curve intersection identity


def test_edge_point_range_check():
    with pytest.raises(ValueError):
        REGION.edge_point(EdgeId.X_A, 1.5)


def test_edge_points_inside_region():
    for edge in EdgeId:
        for k in range(21):
            x, y = REGION.edge_point(edge, k / 20)
            assert omega_contains(x, y), (edge, x, y)


def test_x_zero_edge_reaches_one_half():
    x, y = REGION.edge_point(EdgeId.X_ZERO, 1.0)
    assert (x, y) == (0.0, 0.5)


def test_radicand_nonnegative_on_upper_subregion():
    # 1 - x^2 - 3 y^2 >= 0 wherever y <= sqrt((1-x^2)/3)
    for i in range(101):
        x = B + (A - B) * i / 100
        y = math.sqrt((1 - x * x) / 3)
        assert 1 - x * x - 3 * y * y >= -1e-15


def test_low_curve_radicand_identity():
    # 1 - 10x^2 - 3x^4 >= 0 on [0, b], equality exactly at b
    for i in range(101):
        x = B * i / 100
        val = 1 - 10 * x * x - 3 * x**4
        assert val >= -1e-12
    assert abs(1 - 10 * B * B - 3 * B**4) <= 1e-12


def test_y_sup_is_low_curve_value_at_b():
    assert abs(REGION.y_sup_hi - 0.5 * (1 + B * B)) <= 1e-12
