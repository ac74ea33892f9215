"""Verified global maximization over the admissible region.

maximize_2d runs an interval branch-and-bound over the region: boxes are
bisected along their longer side, clipped in y against the cap curve (the
region is y-simple, so clipping is exact), pruned when their interval upper
bound falls below the certified incumbent, and the final enclosure is derived
from the surviving boxes.  Near the radicand-zero rim only value information
is used; gradient certificates are never evaluated where the gradient is
singular.

interior_critical_points excludes gradient zeros with the division-free
scaled gradient, then certifies each surviving cluster with a Krawczyk
contraction (true gradient plus interval Hessian) on a small box around the
numerically polished point, which proves existence and uniqueness there.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .domain import REGION, EdgeId, OmegaRegion, cap_sup_up
from .interval import Interval, _sqrt_down, _two_prod, hull_of
from .objectives import Objective, ObjectiveId, monotone_bounds

IvFunc = Callable[[Interval], Interval]

#: width below which a gradient-ambiguous box is treated as a critical cluster
CLUSTER_WIDTH = 2e-5
#: width at which boxes touching the radicand-zero rim stop being subdivided
RIM_WIDTH = 1e-3


class NoBracketError(RuntimeError):
    """No verified sign change found on the scan grid."""


def _recip_up(v: float) -> float:
    """Upward-rounded 1/v for v > 0.  Certification-internal; the interval
    layer itself deliberately has no division."""
    r = 1.0 / v
    p, err = _two_prod(r, v)
    if p < 1.0 or (p == 1.0 and err < 0.0):
        return math.nextafter(r, math.inf)
    return r


def _recip_down(v: float) -> float:
    r = 1.0 / v
    p, err = _two_prod(r, v)
    if p > 1.0 or (p == 1.0 and err > 0.0):
        return math.nextafter(r, -math.inf)
    return r


def _recip_iv(x: Interval) -> Interval:
    if x.lo <= 0.0:
        raise ValueError(f"reciprocal needs a strictly positive interval, got {x}")
    return Interval(_recip_down(x.hi), _recip_up(x.lo))


@dataclass(frozen=True)
class BnBConfig:
    tol_value: float = 1e-6
    tol_box: float = 1e-9
    max_boxes: int = 10_000_000

    def __post_init__(self):
        if self.tol_value <= 0 or self.tol_box <= 0 or self.max_boxes <= 0:
            raise ValueError("BnBConfig fields must be positive")


@dataclass(frozen=True)
class Extremum1D:
    value: Interval
    argmax: Interval
    iterations: int
    converged: bool


@dataclass(frozen=True)
class Extremum:
    value: Interval
    argmax: tuple[Interval, Interval]
    kind: EdgeId | None  # None means interior
    iterations: int
    converged: bool

    @property
    def kind_label(self) -> str:
        return "interior" if self.kind is None else self.kind.value


@dataclass(frozen=True)
class CriticalPoint:
    """One isolated gradient zero: enclosing cluster and certified sub-box."""

    cluster: tuple[Interval, Interval]
    certified_box: tuple[Interval, Interval] | None
    value: Interval

    @property
    def certified(self) -> bool:
        return self.certified_box is not None


@dataclass
class CriticalSearch:
    points: list[CriticalPoint] = field(default_factory=list)
    boundary_zeros: list[tuple[float, float]] = field(default_factory=list)
    rim_boxes: list[tuple[float, float, float, float]] = field(default_factory=list)
    rim_value_ub: float = -math.inf
    certified: bool = True
    iterations: int = 0


# ---------------------------------------------------------------------------
# 1-D machinery
# ---------------------------------------------------------------------------


def maximize_1d(fn: IvFunc, lo: float, hi: float, cfg: BnBConfig | None = None) -> Extremum1D:
    """Verified enclosure of max fn over [lo, hi] by interval branch-and-bound."""
    if not lo < hi:
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    cfg = cfg or BnBConfig()

    incumbent = -math.inf

    def sample(t: float) -> None:
        nonlocal incumbent
        v = fn(Interval.point(t)).lo
        if v > incumbent:
            incumbent = v

    sample(lo)
    sample(hi)
    sample(0.5 * (lo + hi))

    counter = itertools.count()
    root_ub = fn(Interval(lo, hi)).hi
    heap = [(-root_ub, next(counter), lo, hi)]
    finished_ub = -math.inf
    finished: list[tuple[float, float, float]] = []
    processed = 0
    converged = True

    while heap:
        neg_ub, _, t1, t2 = heapq.heappop(heap)
        ub = -neg_ub
        if ub <= incumbent + cfg.tol_value:
            heapq.heappush(heap, (neg_ub, next(counter), t1, t2))
            break
        if processed >= cfg.max_boxes:
            heapq.heappush(heap, (neg_ub, next(counter), t1, t2))
            converged = False
            break
        processed += 1
        if t2 - t1 <= cfg.tol_box:
            finished_ub = max(finished_ub, ub)
            finished.append((ub, t1, t2))
            continue
        tm = 0.5 * (t1 + t2)
        sample(tm)
        for u1, u2 in ((t1, tm), (tm, t2)):
            ub_child = fn(Interval(u1, u2)).hi
            if ub_child > incumbent:
                heapq.heappush(heap, (-ub_child, next(counter), u1, u2))

    top_ub = -heap[0][0] if heap else -math.inf
    value_hi = max(incumbent, finished_ub, top_ub)
    if value_hi - incumbent > cfg.tol_value and converged:
        converged = False

    pieces = [Interval(t1, t2) for ub, t1, t2 in finished if ub >= incumbent]
    pieces.extend(Interval(t1, t2) for neg_ub, _, t1, t2 in heap if -neg_ub >= incumbent)
    argmax = hull_of(pieces) if pieces else Interval(lo, hi)
    return Extremum1D(Interval(incumbent, value_hi), argmax, processed, converged)


def find_root_1d(
    fn: IvFunc, lo: float, hi: float, tol: float = 1e-12, scan_points: int = 1000
) -> Interval:
    """Enclosure of a verified sign change of fn on [lo, hi], by bisection."""

    def sign_at(t: float) -> int:
        v = fn(Interval.point(t))
        if v.lo > 0.0:
            return 1
        if v.hi < 0.0:
            return -1
        return 0

    ts = [lo + (hi - lo) * k / scan_points for k in range(scan_points + 1)]
    signs = [sign_at(t) for t in ts]
    bracket = None
    prev_idx = None
    for idx, s in enumerate(signs):
        if s == 0:
            continue
        if prev_idx is not None and signs[prev_idx] * s < 0:
            bracket = (ts[prev_idx], ts[idx], signs[prev_idx])
            break
        prev_idx = idx
    if bracket is None:
        raise NoBracketError(f"no sign change of {fn} on [{lo}, {hi}]")

    t1, t2, s1 = bracket
    while t2 - t1 > tol:
        found = False
        for frac in (0.5, 0.45, 0.55, 0.4, 0.6):
            tm = t1 + frac * (t2 - t1)
            sm = sign_at(tm)
            if sm == 0:
                continue
            if sm == s1:
                t1 = tm
            else:
                t2 = tm
            found = True
            break
        if not found:
            break  # enclosure is as tight as point evaluations allow
    return Interval(t1, t2)


@dataclass(frozen=True)
class UniquenessResult:
    unique: bool
    conclusive: bool
    root: Interval | None
    zero_clusters: int


def verify_uniqueness_1d(
    fn: IvFunc,
    lo: float,
    hi: float,
    min_width: float = 1e-10,
    max_boxes: int = 200_000,
) -> UniquenessResult:
    """Prove fn has exactly one sign-change interval on [lo, hi].

    Subdivides adaptively; subintervals whose enclosure excludes zero are
    certified root-free, the rest shrink to clusters.  Unique means a single
    cluster with verified opposite signs just outside it.
    """
    stack = [(lo, hi)]
    candidates: list[tuple[float, float]] = []
    processed = 0
    conclusive = True
    while stack:
        t1, t2 = stack.pop()
        processed += 1
        if processed > max_boxes:
            conclusive = False
            break
        v = fn(Interval(t1, t2))
        if not v.contains_zero():
            continue
        if t2 - t1 <= min_width:
            candidates.append((t1, t2))
            continue
        tm = 0.5 * (t1 + t2)
        stack.append((t1, tm))
        stack.append((tm, t2))

    if not conclusive:
        return UniquenessResult(False, False, None, 0)
    if not candidates:
        return UniquenessResult(False, True, None, 0)

    candidates.sort()
    clusters = [list(candidates[0])]
    for t1, t2 in candidates[1:]:
        if t1 <= clusters[-1][1] + min_width:
            clusters[-1][1] = max(clusters[-1][1], t2)
        else:
            clusters.append([t1, t2])

    if len(clusters) != 1:
        return UniquenessResult(False, True, None, len(clusters))

    c1, c2 = clusters[0]
    left = max(lo, c1 - min_width)
    right = min(hi, c2 + min_width)
    vl = fn(Interval.point(left))
    vr = fn(Interval.point(right))
    sl = 1 if vl.lo > 0 else (-1 if vl.hi < 0 else 0)
    sr = 1 if vr.lo > 0 else (-1 if vr.hi < 0 else 0)
    if sl == 0 or sr == 0:
        return UniquenessResult(False, False, Interval(c1, c2), 1)
    if sl * sr < 0:
        return UniquenessResult(True, True, Interval(left, right), 1)
    return UniquenessResult(False, True, Interval(c1, c2), 1)


def prove_positive_1d(
    fn: IvFunc, lo: float, hi: float, min_width: float = 1e-9, max_boxes: int = 100_000
) -> bool:
    """True if interval subdivision proves fn > 0 everywhere on [lo, hi]."""
    stack = [(lo, hi)]
    processed = 0
    while stack:
        t1, t2 = stack.pop()
        processed += 1
        if processed > max_boxes:
            return False
        v = fn(Interval(t1, t2))
        if v.lo > 0.0:
            continue
        if v.hi < 0.0 or t2 - t1 <= min_width:
            return False
        tm = 0.5 * (t1 + t2)
        stack.append((t1, tm))
        stack.append((tm, t2))
    return True


def prove_negative_1d(fn: IvFunc, lo: float, hi: float, **kw) -> bool:
    return prove_positive_1d(lambda t: -fn(t), lo, hi, **kw)


# ---------------------------------------------------------------------------
# 2-D branch-and-bound
# ---------------------------------------------------------------------------


def _clip_box(
    region: OmegaRegion, x1: float, x2: float, y1: float, y2: float
) -> tuple[float, float, float, float] | None:
    """Clip the y-range of a box against the cap curve; None if outside the region."""
    y2c = min(y2, cap_sup_up(x1, x2))
    if y1 > y2c:
        return None
    return x1, x2, y1, y2c


def maximize_2d(obj: Objective, region: OmegaRegion = REGION, cfg: BnBConfig | None = None) -> Extremum:
    """Verified enclosure of the global maximum of a 2-D objective over the region."""
    if obj.dimension != 2:
        raise ValueError(f"{obj.id} is not a 2-D objective")
    cfg = cfg or BnBConfig()
    ranges = monotone_bounds(obj.id)

    x_in = region.x_lo_inside
    incumbent = -math.inf
    best_point = (0.0, 0.0)

    def sample(x: float, y: float) -> None:
        nonlocal incumbent, best_point
        x = min(max(x, 0.0), x_in)
        y = min(max(y, 0.0), region.cap_lower(x))
        v = ranges.lower(x, x, y, y)
        if v > incumbent:
            incumbent = v
            best_point = (x, y)

    # coarse seed so pruning starts immediately
    for i in range(9):
        x = x_in * i / 8
        for j in range(5):
            sample(x, region.cap_lower(x) * j / 4)

    root = _clip_box(region, 0.0, region.x_hi, 0.0, region.y_sup_hi)
    assert root is not None
    counter = itertools.count()

    from .interval import _add_up, _mul_up  # scalar rounding helpers

    def bound(box: tuple[float, float, float, float]) -> float:
        x1, x2, y1, y2 = box
        ub = ranges.upper(x1, x2, y1, y2)
        if ub <= incumbent:
            return ub
        # centered-form tightening: f(p) <= f(m) + sup|grad| . |p - m|; valid
        # only where the radicand stays positive, i.e. away from the rim
        g1lo, g1hi, g2lo, g2hi, r_lo, _ = ranges.scaled_gradient_range(x1, x2, y1, y2)
        if r_lo <= 0.0:
            return ub
        u_up = _recip_up(_sqrt_down(r_lo)) if ranges.has_radical else 1.0
        xm, ym = 0.5 * (x1 + x2), 0.5 * (y1 + y2)
        fm = ranges.upper(xm, xm, ym, ym)
        mag1 = _mul_up(max(-g1lo, g1hi, 0.0), u_up)
        mag2 = _mul_up(max(-g2lo, g2hi, 0.0), u_up)
        cf = _add_up(
            fm,
            _add_up(_mul_up(mag1, _add_up(x2, -xm)), _mul_up(mag2, _add_up(y2, -ym))),
        )
        return min(ub, cf)

    heap = [(-bound(root), next(counter), root)]
    finished: list[tuple[float, tuple[float, float, float, float]]] = []
    finished_ub = -math.inf
    processed = 0
    converged = True

    while heap:
        neg_ub, _, box = heapq.heappop(heap)
        ub = -neg_ub
        if ub <= incumbent + cfg.tol_value:
            heapq.heappush(heap, (neg_ub, next(counter), box))
            break
        if processed >= cfg.max_boxes:
            heapq.heappush(heap, (neg_ub, next(counter), box))
            converged = False
            break
        processed += 1
        x1, x2, y1, y2 = box
        if max(x2 - x1, y2 - y1) <= cfg.tol_box:
            finished_ub = max(finished_ub, ub)
            finished.append((ub, box))
            continue
        if x2 - x1 >= y2 - y1:
            xm = 0.5 * (x1 + x2)
            children = ((x1, xm, y1, y2), (xm, x2, y1, y2))
        else:
            ym = 0.5 * (y1 + y2)
            children = ((x1, x2, y1, ym), (x1, x2, ym, y2))
        for child in children:
            clipped = _clip_box(region, *child)
            if clipped is None:
                continue
            cx1, cx2, cy1, cy2 = clipped
            sample(cx2, cy2)
            sample(0.5 * (cx1 + cx2), 0.5 * (cy1 + cy2))
            ub_child = bound(clipped)
            if ub_child > incumbent:
                heapq.heappush(heap, (-ub_child, next(counter), clipped))

    top_ub = -heap[0][0] if heap else -math.inf
    value_hi = max(incumbent, finished_ub, top_ub)
    if value_hi - incumbent > cfg.tol_value and converged:
        converged = False

    survivors = [box for ub, box in finished if ub >= incumbent]
    survivors.extend(box for neg_ub, _, box in heap if -neg_ub >= incumbent)
    if survivors:
        ax = hull_of([Interval(b[0], b[1]) for b in survivors])
        ay = hull_of([Interval(b[2], b[3]) for b in survivors])
    else:
        ax = Interval.point(best_point[0])
        ay = Interval.point(best_point[1])

    kind = _classify_point(region, *best_point)
    return Extremum(Interval(incumbent, value_hi), (ax, ay), kind, processed, converged)


def _classify_point(region: OmegaRegion, x: float, y: float, tol: float = 1e-7) -> EdgeId | None:
    """Which boundary piece (if any) a near-maximal sample point sits on."""
    if x >= region.x_lo_inside - tol:
        return EdgeId.X_A
    if x <= tol:
        return EdgeId.X_ZERO
    if y <= tol:
        return EdgeId.Y_ZERO
    if y >= region.cap_lower(x) - tol:
        return EdgeId.CURVE_LOW if x <= region.constants.b else EdgeId.CURVE_HIGH
    return None


# ---------------------------------------------------------------------------
# interior critical points
# ---------------------------------------------------------------------------


def _newton_polish(obj: Objective, x0: float, y0: float, steps: int = 60) -> tuple[float, float] | None:
    """Float Newton iteration on the scaled gradient (no verification)."""
    x, y = x0, y0
    h = 1e-7
    for _ in range(steps):
        g1, g2 = obj.scaled_gradient(x, y)
        if abs(g1) < 1e-14 and abs(g2) < 1e-14:
            return x, y
        j11 = (obj.scaled_gradient(x + h, y)[0] - obj.scaled_gradient(x - h, y)[0]) / (2 * h)
        j12 = (obj.scaled_gradient(x, y + h)[0] - obj.scaled_gradient(x, y - h)[0]) / (2 * h)
        j21 = (obj.scaled_gradient(x + h, y)[1] - obj.scaled_gradient(x - h, y)[1]) / (2 * h)
        j22 = (obj.scaled_gradient(x, y + h)[1] - obj.scaled_gradient(x, y - h)[1]) / (2 * h)
        det = j11 * j22 - j12 * j21
        if abs(det) < 1e-14:
            return None
        dx = (j22 * g1 - j12 * g2) / det
        dy = (-j21 * g1 + j11 * g2) / det
        x, y = x - dx, y - dy
        if not (-0.5 <= x <= 1.5 and -0.5 <= y <= 1.5):
            return None
    return (x, y) if abs(obj.scaled_gradient(x, y)[0]) < 1e-10 else None


@dataclass(frozen=True)
class _SecondDerivs:
    """Interval-coefficient term tables for the polynomial second derivatives."""

    pxx: tuple[tuple[int, int, Interval], ...]
    pxy: tuple[tuple[int, int, Interval], ...]
    pyy: tuple[tuple[int, int, Interval], ...]


def _poly_terms_iv(pairs) -> tuple[tuple[int, int, Interval], ...]:
    return tuple((i, j, Interval.from_fraction(c)) for (i, j), c in sorted(pairs) if c)


@lru_cache(maxsize=None)
def _second_derivs(oid: ObjectiveId) -> _SecondDerivs:
    from .objectives import OBJECTIVES

    poly = OBJECTIVES[oid].poly
    pxx = _poly_terms_iv((((i - 2, j), c * i * (i - 1)) for (i, j), c in poly.items() if i >= 2))
    pxy = _poly_terms_iv((((i - 1, j - 1), c * i * j) for (i, j), c in poly.items() if i and j))
    pyy = _poly_terms_iv((((i, j - 2), c * j * (j - 1)) for (i, j), c in poly.items() if j >= 2))
    return _SecondDerivs(pxx, pxy, pyy)


def _eval_terms(terms, x: Interval, y: Interval) -> Interval:
    out = Interval.point(0.0)
    for i, j, c in terms:
        t = c
        if i:
            t = t * x**i
        if j:
            t = t * y**j
        out = out + t
    return out


def _gradient_iv(obj: Objective, x: Interval, y: Interval) -> tuple[Interval, Interval]:
    """True gradient enclosure; requires the radicand positive over the box."""
    px = obj._poly_dx_iv(x, y)
    py = obj._poly_dy_iv(x, y)
    if not obj.has_radical:
        return px, py
    from .objectives import _prepared

    prep = _prepared(obj.id)
    r = obj.radicand_iv(x, y)
    sq = r.sqrt_clamped()
    u = _recip_iv(sq)
    m = prep.mult.eval_iv(x)
    fx = px + prep.m_lin_iv * sq - m * x * u
    fy = py - (m * y * u).scale(3.0)
    return fx, fy


def _hessian_iv(
    obj: Objective, x: Interval, y: Interval
) -> tuple[Interval, Interval, Interval]:
    """Enclosure of (fxx, fxy, fyy) over a box with positive radicand."""
    sd = _second_derivs(obj.id)
    pxx = _eval_terms(sd.pxx, x, y)
    pxy = _eval_terms(sd.pxy, x, y)
    pyy = _eval_terms(sd.pyy, x, y)
    if not obj.has_radical:
        return pxx, pxy, pyy
    from .objectives import _prepared

    prep = _prepared(obj.id)
    r = obj.radicand_iv(x, y)
    sq = r.sqrt_clamped()
    u = _recip_iv(sq)
    u3 = u * u * u
    m = prep.mult.eval_iv(x)
    beta = prep.m_lin_iv
    fxx = pxx - (beta * x * u).scale(2.0) - m * u - m * x**2 * u3
    fxy = pxy - (beta * y * u).scale(3.0) - (m * x * y * u3).scale(3.0)
    fyy = pyy - (m * (u + (y**2 * u3).scale(3.0))).scale(3.0)
    return fxx, fxy, fyy


def _krawczyk_certify(
    obj: Objective, px: float, py: float
) -> tuple[Interval, Interval] | None:
    """Certify existence and uniqueness of a gradient zero near (px, py).

    Standard Krawczyk operator on the true gradient with the interval Hessian
    as the Lipschitz matrix: K contained in the interior of the box proves a
    unique zero inside it.
    """
    for half in (1e-7, 1e-6, 1e-8, 1e-5):
        bx = Interval(px - half, px + half)
        by = Interval(py - half, py + half)
        if obj.has_radical and obj.radicand_iv(bx, by).lo <= 0.0:
            continue
        try:
            g1m, g2m = _gradient_iv(obj, Interval.point(px), Interval.point(py))
            h11, h12, h22 = _hessian_iv(obj, bx, by)
        except (ArithmeticError, ValueError):
            continue
        det = h11.mid * h22.mid - h12.mid * h12.mid
        if det == 0.0 or not math.isfinite(det):
            continue
        y11, y12 = h22.mid / det, -h12.mid / det
        y21, y22 = -h12.mid / det, h11.mid / det
        # I - Y * H, with H symmetric
        e11 = Interval.point(1.0) - (h11.scale(y11) + h12.scale(y12))
        e12 = -(h12.scale(y11) + h22.scale(y12))
        e21 = -(h11.scale(y21) + h12.scale(y22))
        e22 = Interval.point(1.0) - (h12.scale(y21) + h22.scale(y22))
        rx = Interval(-half, half)
        ry = Interval(-half, half)
        k1 = Interval.point(px) - (g1m.scale(y11) + g2m.scale(y12)) + e11 * rx + e12 * ry
        k2 = Interval.point(py) - (g1m.scale(y21) + g2m.scale(y22)) + e21 * rx + e22 * ry
        if bx.lo < k1.lo and k1.hi < bx.hi and by.lo < k2.lo and k2.hi < by.hi:
            return bx, by
    return None


def interior_critical_points(
    obj: Objective, region: OmegaRegion = REGION, cfg: BnBConfig | None = None
) -> CriticalSearch:
    """Isolate and certify every gradient zero in the interior of the region.

    Discarded boxes all carry an interval certificate that one scaled-gradient
    component excludes zero; boxes touching the radicand-zero rim are reported
    separately (the rim is the upper boundary curve, whose values are covered
    by edge maximization).
    """
    if obj.dimension != 2:
        raise ValueError(f"{obj.id} is not a 2-D objective")
    cfg = cfg or BnBConfig()
    out = CriticalSearch()

    ranges = monotone_bounds(obj.id)
    root = _clip_box(region, 0.0, region.x_hi, 0.0, region.y_sup_hi)
    assert root is not None
    stack = [root]
    candidates: list[tuple[float, float, float, float]] = []
    processed = 0

    while stack:
        box = stack.pop()
        processed += 1
        if processed > cfg.max_boxes:
            out.certified = False
            break
        x1, x2, y1, y2 = box
        wide = max(x2 - x1, y2 - y1)
        g1lo, g1hi, g2lo, g2hi, r_lo, r_hi = ranges.scaled_gradient_range(x1, x2, y1, y2)
        if obj.has_radical and r_lo <= 0.0:
            if wide <= RIM_WIDTH or r_hi <= 0.0:
                out.rim_boxes.append(box)
                ub = ranges.upper(x1, x2, y1, y2)
                if ub > out.rim_value_ub:
                    out.rim_value_ub = ub
                continue
            stack.extend(_split_clipped(region, box))
            continue
        if g1lo > 0.0 or g1hi < 0.0 or g2lo > 0.0 or g2hi < 0.0:
            continue
        if wide <= CLUSTER_WIDTH:
            candidates.append(box)
            continue
        stack.extend(_split_clipped(region, box))

    out.iterations = processed
    clusters = _merge_boxes(candidates)
    edge_margin = 1e-6
    for cl in clusters:
        cx1, cx2, cy1, cy2 = cl
        hull = (Interval(cx1, cx2), Interval(cy1, cy2))
        polished = _newton_polish(obj, 0.5 * (cx1 + cx2), 0.5 * (cy1 + cy2))
        if polished is None:
            out.points.append(CriticalPoint(hull, None, obj.value_iv(*hull)))
            out.certified = False
            continue
        px, py = polished
        on_boundary = (
            px <= edge_margin
            or py <= edge_margin
            or px >= region.x_lo_inside - edge_margin
            or py >= region.cap_lower(px) - edge_margin
        )
        if on_boundary:
            if not any(abs(px - bx) < 1e-5 and abs(py - by) < 1e-5 for bx, by in out.boundary_zeros):
                out.boundary_zeros.append((px, py))
            continue
        # several disconnected clusters may surround one zero; keep one entry
        duplicate = False
        for prev in out.points:
            ref = prev.certified_box if prev.certified else prev.cluster
            if abs(ref[0].mid - px) < 1e-3 and abs(ref[1].mid - py) < 1e-3:
                duplicate = True
                break
        if duplicate:
            continue
        cert = _krawczyk_certify(obj, px, py)
        if cert is None:
            out.points.append(CriticalPoint(hull, None, obj.value_iv(*hull)))
            out.certified = False
        else:
            out.points.append(CriticalPoint(hull, cert, obj.value_iv(*cert)))
    return out


def _split_clipped(
    region: OmegaRegion, box: tuple[float, float, float, float]
) -> list[tuple[float, float, float, float]]:
    x1, x2, y1, y2 = box
    if x2 - x1 >= y2 - y1:
        xm = 0.5 * (x1 + x2)
        raw = ((x1, xm, y1, y2), (xm, x2, y1, y2))
    else:
        ym = 0.5 * (y1 + y2)
        raw = ((x1, x2, y1, ym), (x1, x2, ym, y2))
    out = []
    for child in raw:
        clipped = _clip_box(region, *child)
        if clipped is not None:
            out.append(clipped)
    return out


def _merge_boxes(
    boxes: list[tuple[float, float, float, float]]
) -> list[tuple[float, float, float, float]]:
    """Merge overlapping/adjacent boxes into connected cluster hulls."""
    eps = 1e-9
    clusters: list[list[float]] = []
    for box in sorted(boxes):
        x1, x2, y1, y2 = box
        merged = False
        for cl in clusters:
            if x1 <= cl[1] + eps and x2 >= cl[0] - eps and y1 <= cl[3] + eps and y2 >= cl[2] - eps:
                cl[0] = min(cl[0], x1)
                cl[1] = max(cl[1], x2)
                cl[2] = min(cl[2], y1)
                cl[3] = max(cl[3], y2)
                merged = True
                break
        if not merged:
            clusters.append([x1, x2, y1, y2])
    # a second pass handles chains discovered out of order
    changed = True
    while changed:
        changed = False
        for i in range(len(clusters)):
            for j in range(i + 1, len(clusters)):
                a, b = clusters[i], clusters[j]
                if a[0] <= b[1] + eps and a[1] >= b[0] - eps and a[2] <= b[3] + eps and a[3] >= b[2] - eps:
                    a[0] = min(a[0], b[0])
                    a[1] = max(a[1], b[1])
                    a[2] = min(a[2], b[2])
                    a[3] = max(a[3], b[3])
                    del clusters[j]
                    changed = True
                    break
            if changed:
                break
    return [tuple(cl) for cl in clusters]


# ---------------------------------------------------------------------------
# float grid brute force (soundness cross-check, not verified arithmetic)
# ---------------------------------------------------------------------------


def grid_maximum(oid: ObjectiveId, n: int = 500) -> float:
    """Plain float maximum of an objective over an n-by-n grid on the region."""
    import numpy as np

    from .domain import CONSTANTS
    from .objectives import OBJECTIVES

    a = CONSTANTS.a_float
    if oid is ObjectiveId.F1:
        x = np.linspace(0.0, a, n * n)
        vals = 3.0 * x**2 + 2.0 / math.sqrt(3.0) * np.sqrt(1.0 - x**2)
        return float(vals.max())

    obj = OBJECTIVES[oid]
    x = np.linspace(0.0, a, n)
    cap = np.minimum(0.5 * (1.0 + x * x), np.sqrt((1.0 - x * x) / 3.0))
    t = np.linspace(0.0, 1.0, n)
    xs = np.repeat(x, n)
    ys = np.outer(cap, t).ravel()
    out = np.zeros_like(xs)
    for (i, j), c in obj.poly.items():
        out += float(c) * xs**i * ys**j
    if obj.has_radical:
        r = np.maximum(1.0 - xs * xs - 3.0 * ys * ys, 0.0)
        mult = (float(obj.m5c) + float(obj.m5l) * xs) / math.sqrt(5.0) + float(
            obj.m7c
        ) / math.sqrt(7.0)
        out += mult * np.sqrt(r)
    return float(out.max())
