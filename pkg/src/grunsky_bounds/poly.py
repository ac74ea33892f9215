"""Exact univariate polynomials with coefficients split over 1, 1/sqrt3, 1/sqrt5, 1/sqrt7.

Every closed-form expression in this toolkit is a rational polynomial plus
rational multiples of 1/sqrt(3), 1/sqrt(5) and 1/sqrt(7); keeping the rational
parts exact (Fractions) until evaluation means the only rounding happens in
the final interval arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .interval import INV_SQRT3, INV_SQRT5, INV_SQRT7, Interval

RatPoly = tuple[Fraction, ...]  # coefficient i is the x**i coefficient

_ZERO = ()


@lru_cache(maxsize=None)
def _iv_coeffs(p: RatPoly) -> tuple[Interval, ...]:
    return tuple(Interval.from_fraction(c) for c in p)


def rp_trim(coeffs: list[Fraction]) -> RatPoly:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def rp_add(p: RatPoly, q: RatPoly) -> RatPoly:
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return rp_trim(out)


def rp_scale(p: RatPoly, s: Fraction) -> RatPoly:
    if s == 0:
        return _ZERO
    return rp_trim([c * s for c in p])


def rp_mul(p: RatPoly, q: RatPoly) -> RatPoly:
    if not p or not q:
        return _ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, ci in enumerate(p):
        if ci == 0:
            continue
        for j, cj in enumerate(q):
            out[i + j] += ci * cj
    return rp_trim(out)


def rp_deriv(p: RatPoly) -> RatPoly:
    return rp_trim([i * c for i, c in enumerate(p)][1:])


def rp_eval_float(p: RatPoly, x: float) -> float:
    acc = 0.0
    for c in reversed(p):
        acc = acc * x + float(c)
    return acc


def rp_eval_iv(p: RatPoly, x: Interval) -> Interval:
    acc = Interval.point(0.0)
    for c in reversed(_iv_coeffs(p)):
        acc = acc * x + c
    return acc


def rp_eval_fraction(p: RatPoly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


_S3 = math.sqrt(3.0)
_S5 = math.sqrt(5.0)
_S7 = math.sqrt(7.0)


@dataclass(frozen=True)
class MixedPoly:
    """r(x) + s(x)/sqrt3 + t(x)/sqrt5 + u(x)/sqrt7 with rational r, s, t, u."""

    one: RatPoly = _ZERO
    inv_sqrt3: RatPoly = _ZERO
    inv_sqrt5: RatPoly = _ZERO
    inv_sqrt7: RatPoly = _ZERO

    def is_zero(self) -> bool:
        return not (self.one or self.inv_sqrt3 or self.inv_sqrt5 or self.inv_sqrt7)

    def eval_float(self, x: float) -> float:
        out = 0.0
        if self.one:
            out += rp_eval_float(self.one, x)
        if self.inv_sqrt3:
            out += rp_eval_float(self.inv_sqrt3, x) / _S3
        if self.inv_sqrt5:
            out += rp_eval_float(self.inv_sqrt5, x) / _S5
        if self.inv_sqrt7:
            out += rp_eval_float(self.inv_sqrt7, x) / _S7
        return out

    def eval_iv(self, x: Interval) -> Interval:
        out = Interval.point(0.0)
        if self.one:
            out = out + rp_eval_iv(self.one, x)
        if self.inv_sqrt3:
            out = out + rp_eval_iv(self.inv_sqrt3, x) * INV_SQRT3
        if self.inv_sqrt5:
            out = out + rp_eval_iv(self.inv_sqrt5, x) * INV_SQRT5
        if self.inv_sqrt7:
            out = out + rp_eval_iv(self.inv_sqrt7, x) * INV_SQRT7
        return out

    def deriv(self) -> MixedPoly:
        return MixedPoly(
            rp_deriv(self.one),
            rp_deriv(self.inv_sqrt3),
            rp_deriv(self.inv_sqrt5),
            rp_deriv(self.inv_sqrt7),
        )

    def add(self, other: MixedPoly) -> MixedPoly:
        return MixedPoly(
            rp_add(self.one, other.one),
            rp_add(self.inv_sqrt3, other.inv_sqrt3),
            rp_add(self.inv_sqrt5, other.inv_sqrt5),
            rp_add(self.inv_sqrt7, other.inv_sqrt7),
        )

    def mul_rational(self, p: RatPoly) -> MixedPoly:
        return MixedPoly(
            rp_mul(self.one, p),
            rp_mul(self.inv_sqrt3, p),
            rp_mul(self.inv_sqrt5, p),
            rp_mul(self.inv_sqrt7, p),
        )

    def scale(self, s: Fraction) -> MixedPoly:
        return MixedPoly(
            rp_scale(self.one, s),
            rp_scale(self.inv_sqrt3, s),
            rp_scale(self.inv_sqrt5, s),
            rp_scale(self.inv_sqrt7, s),
        )
