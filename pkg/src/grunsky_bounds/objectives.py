"""The nine scalar bound objectives and their boundary restrictions.

Every objective has the shape

    f(x, y) = P(x, y) + M(x) * sqrt(1 - x^2 - 3 y^2)

where P is a polynomial with non-negative rational coefficients and the
radical multiplier is M(x) = (m5c + m5l * x)/sqrt5 + m7c/sqrt7 with rational
m5c, m5l, m7c.  A single generic evaluator, gradient and edge-restriction
builder therefore serves all nine objectives; the per-objective data below is
the only thing that differs.

For verified sign certificates the gradient is used in its radical-scaled
form

    G1 = P_x * sqrt(R) + M'(x) * R - M(x) * x,
    G2 = P_y * sqrt(R) - 3 * M(x) * y,          R = 1 - x^2 - 3 y^2,

which is division-free and has the same zeros and signs as the gradient
wherever R > 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .domain import CONSTANTS, EdgeId, omega_contains
from .interval import (
    CLAMP_TOL,
    INV_SQRT5,
    INV_SQRT7,
    Interval,
    NegativeRadicandError,
    _add_down,
    _add_up,
    _mul_down,
    _mul_up,
    _pow_down,
    _pow_up,
    _sqrt_down,
    _sqrt_up,
)
from .poly import MixedPoly, RatPoly, rp_add, rp_eval_iv, rp_mul, rp_scale, rp_trim

_A = CONSTANTS.a  # Fraction(297, 400)
_F0 = Fraction(0)
_F1 = Fraction(1)


class ObjectiveId(Enum):
    F1 = "f1"
    F2 = "f2"
    F3 = "f3"
    F4 = "f4"
    F5 = "f5"
    F6 = "f6"
    F7 = "f7"
    F8 = "f8"
    F9 = "f9"


#: human-readable claim each objective bounds
CLAIM_NAMES = {
    ObjectiveId.F1: "third coefficient modulus",
    ObjectiveId.F2: "fourth coefficient modulus",
    ObjectiveId.F3: "fifth coefficient modulus",
    ObjectiveId.F4: "fourth/third coefficient modulus difference",
    ObjectiveId.F5: "fifth/fourth coefficient modulus difference",
    ObjectiveId.F6: "second Hankel determinant modulus",
    ObjectiveId.F7: "second logarithmic coefficient modulus",
    ObjectiveId.F8: "third logarithmic coefficient modulus",
    ObjectiveId.F9: "fourth logarithmic coefficient modulus",
}


@dataclass(frozen=True)
class Gradient2:
    dx: float
    dy: float


@dataclass(frozen=True)
class RadicalForm1D:
    """W(t) + V(t) * sqrt(S(t)) on [lo, hi]; W, V mixed, S rational."""

    label: str
    w: MixedPoly
    v: MixedPoly
    s: RatPoly
    lo: float
    hi: float

    def value_iv(self, t: Interval) -> Interval:
        out = self.w.eval_iv(t)
        if not self.v.is_zero():
            out = out + self.v.eval_iv(t) * rp_eval_iv(self.s, t).sqrt_clamped()
        return out

    def value(self, t: float) -> float:
        out = self.w.eval_float(t)
        if not self.v.is_zero():
            s = rp_eval_iv(self.s, Interval.point(t))
            if s.hi < -CLAMP_TOL:
                raise NegativeRadicandError(f"{self.label}: radicand negative at t={t}")
            out += self.v.eval_float(t) * math.sqrt(max(s.mid, 0.0))
        return out

    def scaled_derivative(self) -> RadicalForm1D:
        """2*sqrt(S) * d/dt of this form; same zeros and signs where S > 0."""
        s_prime = rp_trim([i * c for i, c in enumerate(self.s)][1:])
        new_w = self.v.deriv().mul_rational(self.s).scale(Fraction(2)).add(
            self.v.mul_rational(s_prime)
        )
        new_v = self.w.deriv().scale(Fraction(2))
        return RadicalForm1D(self.label + "'", new_w, new_v, self.s, self.lo, self.hi)


@dataclass(frozen=True)
class Objective:
    id: ObjectiveId
    poly: dict[tuple[int, int], Fraction]
    m5c: Fraction
    m5l: Fraction
    m7c: Fraction
    dimension: int = 2

    # -- radical multiplier ---------------------------------------------------

    def _mult(self) -> MixedPoly:
        return MixedPoly(
            inv_sqrt5=rp_trim([self.m5c, self.m5l]),
            inv_sqrt7=rp_trim([self.m7c]),
        )

    def _mult_float(self, x: float) -> float:
        return (float(self.m5c) + float(self.m5l) * x) / math.sqrt(5.0) + float(
            self.m7c
        ) / math.sqrt(7.0)

    @property
    def has_radical(self) -> bool:
        return bool(self.m5c or self.m5l or self.m7c)

    # -- evaluation -----------------------------------------------------------

    def radicand(self, x: float, y: float) -> float:
        return 1.0 - x * x - 3.0 * y * y

    def radicand_iv(self, x: Interval, y: Interval) -> Interval:
        return Interval.point(1.0) - x**2 - (y**2).scale(3.0)

    def value(self, x: float, y: float) -> float:
        """Point evaluation; y is ignored for the 1-D objective."""
        if self.dimension == 1:
            y = 0.0
        if not omega_contains(x, y, slack=1e-9):
            raise ValueError(f"({x}, {y}) outside the admissible region")
        out = 0.0
        for (i, j), c in self.poly.items():
            out += float(c) * x**i * y**j
        if self.has_radical:
            r = self.radicand(x, y)
            if r < -CLAMP_TOL:
                raise NegativeRadicandError(f"radicand {r} at ({x}, {y})")
            out += self._mult_float(x) * math.sqrt(max(r, 0.0))
        return out

    def value_iv(self, x: Interval, y: Interval) -> Interval:
        if self.dimension == 1:
            y = Interval.point(0.0)
        prep = _prepared(self.id)
        out = Interval.point(0.0)
        for i, j, c in prep.terms:
            term = c
            if i:
                term = term * x**i
            if j:
                term = term * y**j
            out = out + term
        if self.has_radical:
            out = out + prep.mult.eval_iv(x) * self.radicand_iv(x, y).sqrt_clamped()
        return out

    # -- gradients ------------------------------------------------------------

    def _poly_dx(self, x: float, y: float) -> float:
        return sum(float(c) * i * x ** (i - 1) * y**j for (i, j), c in self.poly.items() if i)

    def _poly_dy(self, x: float, y: float) -> float:
        return sum(float(c) * j * x**i * y ** (j - 1) for (i, j), c in self.poly.items() if j)

    def gradient(self, x: float, y: float) -> Gradient2:
        """Analytic gradient; requires the radicand strictly positive."""
        if self.dimension == 1:
            y = 0.0
        dx = self._poly_dx(x, y)
        dy = self._poly_dy(x, y)
        if self.has_radical:
            r = self.radicand(x, y)
            if r <= 0.0:
                raise NegativeRadicandError(f"gradient singular: radicand {r} at ({x}, {y})")
            sq = math.sqrt(r)
            m = self._mult_float(x)
            dx += float(self.m5l) / math.sqrt(5.0) * sq - m * x / sq
            dy += -3.0 * m * y / sq
        return Gradient2(dx, dy)

    def _poly_dx_iv(self, x: Interval, y: Interval) -> Interval:
        out = Interval.point(0.0)
        for i, j, c in _prepared(self.id).dx_terms:
            term = c
            if i:
                term = term * x**i
            if j:
                term = term * y**j
            out = out + term
        return out

    def _poly_dy_iv(self, x: Interval, y: Interval) -> Interval:
        out = Interval.point(0.0)
        for i, j, c in _prepared(self.id).dy_terms:
            term = c
            if i:
                term = term * x**i
            if j:
                term = term * y**j
            out = out + term
        return out

    def scaled_gradient_iv(self, x: Interval, y: Interval) -> tuple[Interval, Interval]:
        """Division-free gradient enclosure, scaled by sqrt(R) when a radical is present."""
        px = self._poly_dx_iv(x, y)
        py = self._poly_dy_iv(x, y)
        if not self.has_radical:
            return px, py
        prep = _prepared(self.id)
        r = self.radicand_iv(x, y)
        sq = r.sqrt_clamped()
        m = prep.mult.eval_iv(x)
        g1 = px * sq + prep.m_lin_iv * r - m * x
        g2 = py * sq - (m * y).scale(3.0)
        return g1, g2

    def scaled_gradient(self, x: float, y: float) -> tuple[float, float]:
        px = self._poly_dx(x, y)
        py = self._poly_dy(x, y)
        if not self.has_radical:
            return px, py
        r = max(self.radicand(x, y), 0.0)
        sq = math.sqrt(r)
        m = self._mult_float(x)
        g1 = px * sq + float(self.m5l) / math.sqrt(5.0) * r - m * x
        g2 = py * sq - 3.0 * m * y
        return g1, g2

    # -- critical-point reduction ----------------------------------------------

    def reduction_residual(self, x: float, y: float) -> float:
        """Residual of 3y*df/dx - x*df/dy, in which the 1/sqrt(R) terms cancel."""
        out = 3.0 * y * self._poly_dx(x, y) - x * self._poly_dy(x, y)
        if self.m5l:
            r = self.radicand(x, y)
            if r < -CLAMP_TOL:
                raise NegativeRadicandError(f"radicand {r} at ({x}, {y})")
            out += 3.0 * float(self.m5l) / math.sqrt(5.0) * y * math.sqrt(max(r, 0.0))
        return out

    # -- edge restrictions -------------------------------------------------------

    def restriction(self, edge: EdgeId) -> RadicalForm1D:
        return _restriction_cached(self.id, edge)


def _poly_rows(poly: dict[tuple[int, int], Fraction]) -> dict[int, RatPoly]:
    """Group P(x, y) = sum_j y^j * row_j(x)."""
    rows: dict[int, list[Fraction]] = {}
    for (i, j), c in poly.items():
        row = rows.setdefault(j, [])
        while len(row) <= i:
            row.append(_F0)
        row[i] += c
    return {j: rp_trim(row) for j, row in rows.items()}


def _build_restriction(obj: Objective, edge: EdgeId) -> RadicalForm1D:
    rows = _poly_rows(obj.poly)
    if max(rows, default=0) > 2:
        raise ValueError("edge restrictions assume y-degree <= 2")
    r0 = rows.get(0, ())
    r1 = rows.get(1, ())
    r2 = rows.get(2, ())
    a = _A
    label = f"{obj.id.value}|{edge.value}"

    if edge in (EdgeId.X_ZERO, EdgeId.X_A):
        # variable is y; x is pinned to an exact rational
        x0 = _F0 if edge is EdgeId.X_ZERO else a
        from .poly import rp_eval_fraction

        q = rp_trim(
            [rp_eval_fraction(r0, x0), rp_eval_fraction(r1, x0), rp_eval_fraction(r2, x0)]
        )
        mult = MixedPoly(
            inv_sqrt5=rp_trim([obj.m5c + obj.m5l * x0]),
            inv_sqrt7=rp_trim([obj.m7c]),
        )
        s = rp_trim([_F1 - x0 * x0, _F0, Fraction(-3)])
        hi = 0.5 if edge is EdgeId.X_ZERO else CONSTANTS.iv_d.hi
        return RadicalForm1D(label, MixedPoly(one=q), mult, s, 0.0, hi)

    if edge is EdgeId.Y_ZERO:
        q = r0
        mult = MixedPoly(
            inv_sqrt5=rp_trim([obj.m5c, obj.m5l]), inv_sqrt7=rp_trim([obj.m7c])
        )
        s = rp_trim([_F1, _F0, Fraction(-1)])
        return RadicalForm1D(label, MixedPoly(one=q), mult, s, 0.0, CONSTANTS.iv_a.hi)

    if edge is EdgeId.CURVE_LOW:
        # y = (1 + x^2)/2; the shared radicand becomes (1 - 10x^2 - 3x^4)/4
        cap: RatPoly = (Fraction(1, 2), _F0, Fraction(1, 2))
        q = rp_add(r0, rp_add(rp_mul(r1, cap), rp_mul(r2, rp_mul(cap, cap))))
        mult = MixedPoly(
            inv_sqrt5=rp_trim([obj.m5c / 2, obj.m5l / 2]),
            inv_sqrt7=rp_trim([obj.m7c / 2]),
        )
        s = rp_trim([_F1, _F0, Fraction(-10), _F0, Fraction(-3)])
        return RadicalForm1D(label, MixedPoly(one=q), mult, s, 0.0, CONSTANTS.iv_b.hi)

    if edge is EdgeId.CURVE_HIGH:
        # y = sqrt((1 - x^2)/3); the shared radicand vanishes identically here
        y_sq: RatPoly = (Fraction(1, 3), _F0, Fraction(-1, 3))
        q = rp_add(r0, rp_mul(r2, y_sq))
        mult = MixedPoly(one=r1)
        return RadicalForm1D(
            label, MixedPoly(one=q), mult, y_sq, CONSTANTS.iv_b.lo, CONSTANTS.iv_a.hi
        )

    raise ValueError(f"unknown edge {edge}")


@lru_cache(maxsize=None)
def _restriction_cached(oid: ObjectiveId, edge: EdgeId) -> RadicalForm1D:
    return _build_restriction(OBJECTIVES[oid], edge)


@dataclass(frozen=True)
class _Prepared:
    """Interval-converted constants, built once per objective."""

    terms: tuple[tuple[int, int, Interval], ...]
    dx_terms: tuple[tuple[int, int, Interval], ...]
    dy_terms: tuple[tuple[int, int, Interval], ...]
    mult: MixedPoly
    m_lin_iv: Interval


@lru_cache(maxsize=None)
def _prepared(oid: ObjectiveId) -> _Prepared:
    obj = OBJECTIVES[oid]
    terms = tuple(
        (i, j, Interval.from_fraction(c)) for (i, j), c in sorted(obj.poly.items())
    )
    dx = tuple(
        (i - 1, j, Interval.from_fraction(c * i))
        for (i, j), c in sorted(obj.poly.items())
        if i
    )
    dy = tuple(
        (i, j - 1, Interval.from_fraction(c * j))
        for (i, j), c in sorted(obj.poly.items())
        if j
    )
    return _Prepared(terms, dx, dy, obj._mult(), Interval.from_fraction(obj.m5l) * INV_SQRT5)


OBJECTIVES: dict[ObjectiveId, Objective] = {
    ObjectiveId.F1: Objective(
        ObjectiveId.F1, {(2, 0): Fraction(3)}, _F0, _F0, _F0, dimension=1
    ),
    ObjectiveId.F2: Objective(
        ObjectiveId.F2, {(3, 0): Fraction(4), (1, 1): Fraction(6)}, Fraction(2), _F0, _F0
    ),
    ObjectiveId.F3: Objective(
        ObjectiveId.F3,
        {(4, 0): Fraction(5), (2, 1): Fraction(12), (0, 2): Fraction(3)},
        _F0,
        Fraction(6),
        Fraction(2),
    ),
    ObjectiveId.F4: Objective(
        ObjectiveId.F4,
        {(3, 0): 3 / _A - 4, (1, 1): 6 - 2 / _A},
        Fraction(2),
        _F0,
        _F0,
    ),
    ObjectiveId.F5: Objective(
        ObjectiveId.F5,
        {(4, 0): 4 / _A - 5, (2, 1): 12 - 6 / _A, (0, 2): Fraction(3)},
        _F0,
        6 - 2 / _A,
        Fraction(2),
    ),
    ObjectiveId.F6: Objective(
        ObjectiveId.F6, {(4, 0): _F1, (0, 2): Fraction(4)}, _F0, Fraction(4), _F0
    ),
    ObjectiveId.F7: Objective(
        ObjectiveId.F7, {(2, 0): Fraction(1, 2), (0, 1): _F1}, _F0, _F0, _F0
    ),
    ObjectiveId.F8: Objective(
        ObjectiveId.F8, {(3, 0): Fraction(1, 3), (1, 1): _F1}, _F1, _F0, _F0
    ),
    ObjectiveId.F9: Objective(
        ObjectiveId.F9,
        {(4, 0): Fraction(1, 4), (2, 1): _F1, (0, 2): Fraction(1, 2)},
        _F0,
        _F1,
        _F1,
    ),
}

# The 1-D objective carries its radical multiplier separately: its radicand is
# 1 - x^2 rather than the shared 1 - x^2 - 3y^2, so it is registered with the
# Y_ZERO-style restriction below instead of the generic 2-D radical fields.
F1_FORM = RadicalForm1D(
    "f1",
    MixedPoly(one=(Fraction(0), Fraction(0), Fraction(3))),
    MixedPoly(inv_sqrt3=(Fraction(2),)),
    (_F1, _F0, Fraction(-1)),
    0.0,
    CONSTANTS.iv_a.hi,
)


class BoundaryRestrictionId(Enum):
    G1 = ("g1", ObjectiveId.F2, EdgeId.CURVE_LOW)
    G2 = ("g2", ObjectiveId.F2, EdgeId.CURVE_HIGH)
    G3 = ("g3", ObjectiveId.F3, EdgeId.CURVE_LOW)
    G4 = ("g4", ObjectiveId.F3, EdgeId.CURVE_HIGH)
    G5 = ("g5", ObjectiveId.F4, EdgeId.CURVE_LOW)
    G6 = ("g6", ObjectiveId.F4, EdgeId.CURVE_HIGH)
    G7 = ("g7", ObjectiveId.F5, EdgeId.CURVE_LOW)
    G8 = ("g8", ObjectiveId.F5, EdgeId.CURVE_HIGH)
    G9 = ("g9", ObjectiveId.F6, EdgeId.CURVE_LOW)
    G10 = ("g10", ObjectiveId.F6, EdgeId.CURVE_HIGH)

    def __init__(self, label: str, parent: ObjectiveId, edge: EdgeId):
        self.label = label
        self.parent = parent
        self.edge = edge


def eval_objective(oid: ObjectiveId, x: float, y: float = 0.0) -> float:
    if oid is ObjectiveId.F1:
        return F1_FORM.value(x)
    return OBJECTIVES[oid].value(x, y)


def eval_objective_iv(oid: ObjectiveId, x: Interval, y: Interval | None = None) -> Interval:
    if oid is ObjectiveId.F1:
        return F1_FORM.value_iv(x)
    if y is None:
        raise ValueError("2-D objective needs a y interval")
    return OBJECTIVES[oid].value_iv(x, y)


def grad(oid: ObjectiveId, x: float, y: float = 0.0) -> Gradient2:
    if oid is ObjectiveId.F1:
        # f1'(x) = 6x - (2/sqrt3) x / sqrt(1 - x^2)
        r = 1.0 - x * x
        if r <= 0.0:
            raise NegativeRadicandError(f"gradient singular at x={x}")
        return Gradient2(6.0 * x - 2.0 / math.sqrt(3.0) * x / math.sqrt(r), 0.0)
    return OBJECTIVES[oid].gradient(x, y)


def eval_boundary(rid: BoundaryRestrictionId, x: float) -> float:
    return OBJECTIVES[rid.parent].restriction(rid.edge).value(x)


def eval_boundary_iv(rid: BoundaryRestrictionId, x: Interval) -> Interval:
    return OBJECTIVES[rid.parent].restriction(rid.edge).value_iv(x)


# -- fast directed-rounded range bounds for branch-and-bound ---------------------
#
# Every catalog objective has non-negative polynomial coefficients and a
# non-negative, non-decreasing radical multiplier, while the shared radicand
# decreases in both variables on the first quadrant.  Over a box
# [x1,x2] x [y1,y2] inside the region the range is therefore bounded by
# evaluating the monotone pieces at opposite corners, which matches the
# generic interval evaluation but avoids allocating intervals in the hot
# branch-and-bound loop.

_S5F = math.sqrt(5.0)
_S7F = math.sqrt(7.0)


@dataclass(frozen=True)
class MonotoneBounds:
    """Scalar lower/upper range bounds over first-quadrant boxes."""

    terms: tuple[tuple[int, int, float, float], ...]  # (i, j, c_lo, c_hi)
    dx_terms: tuple[tuple[int, int, float, float], ...]
    dy_terms: tuple[tuple[int, int, float, float], ...]
    m5c: tuple[float, float]
    m5l: tuple[float, float]
    m7c: tuple[float, float]
    has_radical: bool

    def upper(self, x1: float, x2: float, y1: float, y2: float) -> float:
        out = 0.0
        for i, j, _, c_hi in self.terms:
            t = c_hi
            if i:
                t = _mul_up(t, _pow_up(x2, i))
            if j:
                t = _mul_up(t, _pow_up(y2, j))
            out = _add_up(out, t)
        if self.has_radical:
            r = _add_up(_add_up(1.0, -_mul_down(x1, x1)), -_mul_down(3.0, _mul_down(y1, y1)))
            if r > 0.0:
                m = _add_up(self.m5c[1], _add_up(_mul_up(self.m5l[1], x2), self.m7c[1]))
                out = _add_up(out, _mul_up(m, _sqrt_up(r)))
        return out

    def lower(self, x1: float, x2: float, y1: float, y2: float) -> float:
        out = 0.0
        for i, j, c_lo, _ in self.terms:
            t = c_lo
            if i:
                t = _mul_down(t, _pow_down(x1, i))
            if j:
                t = _mul_down(t, _pow_down(y1, j))
            out = _add_down(out, t)
        if self.has_radical:
            r = _add_down(_add_down(1.0, -_mul_up(x2, x2)), -_mul_up(3.0, _mul_up(y2, y2)))
            if r > 0.0:
                m = _add_down(self.m5c[0], _add_down(_mul_down(self.m5l[0], x1), self.m7c[0]))
                out = _add_down(out, _mul_down(m, _sqrt_down(r)))
        return out

    def scaled_gradient_range(
        self, x1: float, x2: float, y1: float, y2: float
    ) -> tuple[float, float, float, float, float, float]:
        """Bounds for the radical-scaled gradient over a first-quadrant box.

        Returns (g1_lo, g1_hi, g2_lo, g2_hi, r_lo, r_hi) where [r_lo, r_hi]
        encloses the radicand range; the gradient bounds certify signs only
        where the radicand is positive.
        """
        px_lo, px_hi = 0.0, 0.0
        for i, j, c_lo, c_hi in self.dx_terms:
            t_hi = c_hi
            t_lo = c_lo
            if i:
                t_hi = _mul_up(t_hi, _pow_up(x2, i))
                t_lo = _mul_down(t_lo, _pow_down(x1, i))
            if j:
                t_hi = _mul_up(t_hi, _pow_up(y2, j))
                t_lo = _mul_down(t_lo, _pow_down(y1, j))
            px_hi = _add_up(px_hi, t_hi)
            px_lo = _add_down(px_lo, t_lo)
        py_lo, py_hi = 0.0, 0.0
        for i, j, c_lo, c_hi in self.dy_terms:
            t_hi = c_hi
            t_lo = c_lo
            if i:
                t_hi = _mul_up(t_hi, _pow_up(x2, i))
                t_lo = _mul_down(t_lo, _pow_down(x1, i))
            if j:
                t_hi = _mul_up(t_hi, _pow_up(y2, j))
                t_lo = _mul_down(t_lo, _pow_down(y1, j))
            py_hi = _add_up(py_hi, t_hi)
            py_lo = _add_down(py_lo, t_lo)
        if not self.has_radical:
            return px_lo, px_hi, py_lo, py_hi, 1.0, 1.0

        r_hi = _add_up(_add_up(1.0, -_mul_down(x1, x1)), -_mul_down(3.0, _mul_down(y1, y1)))
        r_lo = _add_down(_add_down(1.0, -_mul_up(x2, x2)), -_mul_up(3.0, _mul_up(y2, y2)))
        sq_hi = _sqrt_up(max(r_hi, 0.0))
        sq_lo = _sqrt_down(max(r_lo, 0.0))
        m_hi = _add_up(self.m5c[1], _add_up(_mul_up(self.m5l[1], x2), self.m7c[1]))
        m_lo = _add_down(self.m5c[0], _add_down(_mul_down(self.m5l[0], x1), self.m7c[0]))

        # G1 = Px*sqrt(R) + beta*R - M*x  with beta = m5l/sqrt5 >= 0
        t_hi = _mul_up(px_hi, sq_hi)
        t_hi = _add_up(t_hi, _mul_up(self.m5l[1], r_hi) if r_hi >= 0.0 else _mul_up(self.m5l[0], r_hi))
        g1_hi = _add_up(t_hi, -_mul_down(m_lo, x1))
        t_lo = _mul_down(px_lo, sq_lo)
        t_lo = _add_down(t_lo, _mul_down(self.m5l[0], r_lo) if r_lo >= 0.0 else _mul_down(self.m5l[1], r_lo))
        g1_lo = _add_down(t_lo, -_mul_up(m_hi, x2))

        # G2 = Py*sqrt(R) - 3*M*y
        g2_hi = _add_up(_mul_up(py_hi, sq_hi), -_mul_down(3.0, _mul_down(m_lo, y1)))
        g2_lo = _add_down(_mul_down(py_lo, sq_lo), -_mul_up(3.0, _mul_up(m_hi, y2)))
        return g1_lo, g1_hi, g2_lo, g2_hi, r_lo, r_hi


@lru_cache(maxsize=None)
def monotone_bounds(oid: ObjectiveId) -> MonotoneBounds:
    obj = OBJECTIVES[oid]
    if any(c < 0 for c in obj.poly.values()) or obj.m5c < 0 or obj.m5l < 0 or obj.m7c < 0:
        raise ValueError(f"{oid} violates the monotone-coefficient assumption")

    def enclose(pairs):
        out = []
        for (i, j), c in sorted(pairs):
            iv = Interval.from_fraction(c)
            out.append((i, j, iv.lo, iv.hi))
        return tuple(out)

    terms = enclose(obj.poly.items())
    dx = enclose(((i - 1, j), c * i) for (i, j), c in obj.poly.items() if i)
    dy = enclose(((i, j - 1), c * j) for (i, j), c in obj.poly.items() if j)
    q5c = Interval.from_fraction(obj.m5c) * INV_SQRT5
    q5l = Interval.from_fraction(obj.m5l) * INV_SQRT5
    q7c = Interval.from_fraction(obj.m7c) * INV_SQRT7
    return MonotoneBounds(
        terms,
        dx,
        dy,
        (q5c.lo, q5c.hi),
        (q5l.lo, q5l.hi),
        (q7c.lo, q7c.hi),
        obj.has_radical,
    )


# -- reduction equations used to locate interior critical points ----------------

F2_REDUCED_POLY: RatPoly = (Fraction(14), Fraction(-78), Fraction(-126), Fraction(270))

F6_CUBIC: RatPoly = rp_scale((_F0, Fraction(-11, 30), _F0, _F1), _F1)


def f2_constraint_curve_x(y: float) -> float:
    """x on the combined-equation curve x^2 = 3y^2/(1 - 6y); only defined for y < 1/6."""
    if y >= 1.0 / 6.0:
        raise ValueError(f"curve undefined for y={y} >= 1/6")
    return math.sqrt(3.0 * y * y / (1.0 - 6.0 * y))


def f4_h1(y: float) -> float:
    """x as a function of y on the combined-equation curve of the f4 system."""
    num = y * math.sqrt(6.0) * math.sqrt(float(3 * _A - 1))
    den = math.sqrt(9.0 * y * float(4 * _A - 3) + float(6 * _A - 2))
    return num / den


def f6_h2(x: float) -> float:
    """y as a function of x on the second-equation curve of the f6 system."""
    return math.sqrt(20.0 - 29.0 * x * x) / (2.0 * math.sqrt(15.0))
