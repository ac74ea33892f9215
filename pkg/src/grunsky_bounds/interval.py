"""Outward-rounded interval arithmetic.

Every operation returns an interval that contains the exact real-arithmetic
image of its operands.  Directed rounding is implemented with error-free
transformations (TwoSum / Dekker's TwoProduct) followed by a one-ulp nudge
only when the float result actually rounded; exact results keep exact
endpoints.  This convention is used uniformly by every operation here.

Division is deliberately not provided: no quantity in this toolkit needs it,
and omitting it keeps the verified surface small.
"""

from __future__ import annotations

import math
from fractions import Fraction

# Negative radicands at least this small are treated as rounding artifacts of
# points on the region boundary, where the radicand vanishes exactly.
CLAMP_TOL = 1e-12

_SPLITTER = 134217729.0  # 2**27 + 1, Dekker/Veltkamp splitting constant
_INF = math.inf


class NegativeRadicandError(ArithmeticError):
    """Radicand is entirely below the clamp tolerance: point outside the domain."""


def _two_sum(x: float, y: float) -> tuple[float, float]:
    s = x + y
    bb = s - x
    err = (x - (s - bb)) + (y - bb)
    return s, err


def _two_prod(x: float, y: float) -> tuple[float, float]:
    p = x * y
    cx = _SPLITTER * x
    xh = cx - (cx - x)
    xl = x - xh
    cy = _SPLITTER * y
    yh = cy - (cy - y)
    yl = y - yh
    err = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl
    return p, err


def _add_down(x: float, y: float) -> float:
    s, err = _two_sum(x, y)
    if err < 0.0:
        return math.nextafter(s, -_INF)
    return s


def _add_up(x: float, y: float) -> float:
    s, err = _two_sum(x, y)
    if err > 0.0:
        return math.nextafter(s, _INF)
    return s


def _mul_down(x: float, y: float) -> float:
    p, err = _two_prod(x, y)
    if err < 0.0:
        return math.nextafter(p, -_INF)
    return p


def _mul_up(x: float, y: float) -> float:
    p, err = _two_prod(x, y)
    if err > 0.0:
        return math.nextafter(p, _INF)
    return p


def _sqrt_down(x: float) -> float:
    if x <= 0.0:
        return 0.0
    r = math.sqrt(x)
    rr, err = _two_prod(r, r)
    if rr > x or (rr == x and err > 0.0):
        return math.nextafter(r, -_INF)
    return r


def _sqrt_up(x: float) -> float:
    if x <= 0.0:
        return 0.0
    r = math.sqrt(x)
    rr, err = _two_prod(r, r)
    if rr < x or (rr == x and err < 0.0):
        return math.nextafter(r, _INF)
    return r


def _pow_down(x: float, n: int) -> float:
    # x >= 0
    r = x
    for _ in range(n - 1):
        r = _mul_down(r, x)
    return r


def _pow_up(x: float, n: int) -> float:
    r = x
    for _ in range(n - 1):
        r = _mul_up(r, x)
    return r


class Interval:
    """Closed interval [lo, hi] with inclusion-correct arithmetic."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: float, hi: float):
        lo = float(lo)
        hi = float(hi)
        if math.isnan(lo) or math.isnan(hi):
            raise ValueError("NaN endpoint")
        if lo > hi:
            raise ValueError(f"invalid interval [{lo!r}, {hi!r}]")
        self.lo = lo
        self.hi = hi

    @classmethod
    def point(cls, v: float) -> Interval:
        return cls(v, v)

    @classmethod
    def from_fraction(cls, q: Fraction) -> Interval:
        """Tightest interval with float endpoints containing the rational q."""
        f = float(q)
        fq = Fraction(f)
        if fq == q:
            return cls(f, f)
        if fq > q:
            return cls(math.nextafter(f, -_INF), f)
        return cls(f, math.nextafter(f, _INF))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: Interval) -> Interval:
        return Interval(_add_down(self.lo, other.lo), _add_up(self.hi, other.hi))

    def __sub__(self, other: Interval) -> Interval:
        return Interval(_add_down(self.lo, -other.hi), _add_up(self.hi, -other.lo))

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: Interval) -> Interval:
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        lo = min(_mul_down(a, c), _mul_down(a, d), _mul_down(b, c), _mul_down(b, d))
        hi = max(_mul_up(a, c), _mul_up(a, d), _mul_up(b, c), _mul_up(b, d))
        return Interval(lo, hi)

    def __pow__(self, n: int) -> Interval:
        if not isinstance(n, int) or n < 0:
            raise ValueError("only small non-negative integer powers")
        if n == 0:
            return Interval(1.0, 1.0)
        if n == 1:
            return Interval(self.lo, self.hi)
        if n % 2 == 0:
            # even powers: analyse monotone pieces so [-1,1]**2 == [0,1]
            if self.lo >= 0.0:
                return Interval(_pow_down(self.lo, n), _pow_up(self.hi, n))
            if self.hi <= 0.0:
                return Interval(_pow_down(-self.hi, n), _pow_up(-self.lo, n))
            return Interval(0.0, _pow_up(max(-self.lo, self.hi), n))
        lo = _pow_down(self.lo, n) if self.lo >= 0.0 else -_pow_up(-self.lo, n)
        hi = _pow_up(self.hi, n) if self.hi >= 0.0 else -_pow_down(-self.hi, n)
        return Interval(lo, hi)

    def scale(self, s: float) -> Interval:
        if s >= 0.0:
            return Interval(_mul_down(self.lo, s), _mul_up(self.hi, s))
        return Interval(_mul_down(self.hi, s), _mul_up(self.lo, s))

    def sqrt_clamped(self, tol: float = CLAMP_TOL) -> Interval:
        """Enclosure of sqrt(self intersected with [0, inf)).

        Lower endpoints below zero are clamped; an interval entirely below
        -tol is rejected as a genuine domain violation rather than rounding
        noise.
        """
        if self.hi < -tol:
            raise NegativeRadicandError(f"radicand enclosure [{self.lo}, {self.hi}] is negative")
        lo = max(self.lo, 0.0)
        hi = max(self.hi, 0.0)
        return Interval(_sqrt_down(lo), _sqrt_up(hi))

    # -- set operations and predicates ---------------------------------------

    def hull(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersects(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def min_with(self, other: Interval) -> Interval:
        """Enclosure of pointwise min over the two enclosed ranges."""
        return Interval(min(self.lo, other.lo), min(self.hi, other.hi))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def mid(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Interval):
            return NotImplemented
        return self.lo == other.lo and self.hi == other.hi

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"


def hull_of(intervals: list[Interval]) -> Interval:
    if not intervals:
        raise ValueError("empty hull")
    lo = min(iv.lo for iv in intervals)
    hi = max(iv.hi for iv in intervals)
    return Interval(lo, hi)


# Shared irrational constants, as tight verified enclosures.
SQRT3 = Interval.point(3.0).sqrt_clamped()
SQRT5 = Interval.point(5.0).sqrt_clamped()
SQRT7 = Interval.point(7.0).sqrt_clamped()
INV_SQRT3 = SQRT3 * Interval.from_fraction(Fraction(1, 3))
INV_SQRT5 = SQRT5 * Interval.from_fraction(Fraction(1, 5))
INV_SQRT7 = SQRT7 * Interval.from_fraction(Fraction(1, 7))
