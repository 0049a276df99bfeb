"""Area schemes for the circle and a pi enclosure that never uses pi.

The side-count recursion starts from the triangle (n = 3), where
sin(pi/3) = sqrt(3)/2 and cos(pi/3) = 1/2 are algebraic, and halves the
angle with square roots only. ``n sin(pi/n) < pi < n tan(pi/n)`` then
brackets pi from both sides.

Factors of ``n = 3 * 2**k`` are applied as one multiplication by 3 and an
exact power-of-two scaling.
"""

from __future__ import annotations

from dataclasses import dataclass

from circlearea.errors import (
    DepthExceeded,
    InvalidArgument,
    InvalidRadii,
    InvalidStretch,
    NonpositiveRadius,
    ThetaOutOfRange,
)
from circlearea.interval import Interval, fmt, sqrt_i

MAX_K = 40
MIN_TARGET_WIDTH = 1e-12
DEFAULT_PI_WIDTH = MIN_TARGET_WIDTH

# pi/n lies in (0, pi/3] for every stage
_SIN_RANGE = Interval(0.0, 1.0)
_COS_RANGE = Interval(0.5, 1.0)

# 6 sin(pi/6) = 3 and 6 tan(pi/6) = 2 sqrt(3) < 3.464101615137755 (the
# double above 2 sqrt(3)); lower bounds increase and upper bounds decrease with n
HEXAGON_BRACKET = Interval(3.0, 3.464101615137755)

PI_COLUMNS = ("k_used", "n", "lo", "hi", "width")


@dataclass(frozen=True)
class PolygonStage:
    """Half-angle state for the angle pi/n, n = 3 * 2**k."""

    k: int
    n: int
    sin_enc: Interval
    cos_enc: Interval
    tan_enc: Interval

    def times_n(self, x: Interval) -> Interval:
        return (3.0 * x).scale2(self.k)


@dataclass(frozen=True)
class PiEnclosure:
    value: Interval
    k_used: int
    width: float

    @property
    def n(self) -> int:
        return 3 * 2**self.k_used

    def csv_row(self) -> list[str]:
        return [str(self.k_used), str(self.n), fmt(self.value.lo), fmt(self.value.hi), fmt(self.width)]


@dataclass(frozen=True)
class TrapezoidScheme:
    """``trapezoid`` is the summed area of all n trapezoids; ``sector`` is c_n."""

    c_total: Interval
    trapezoid: Interval
    between_sectors_factor: Interval
    sector: Interval

    def consistent(self) -> bool:
        return self.trapezoid.overlaps(self.c_total * self.between_sectors_factor)


def polygon_stage_seed() -> PolygonStage:
    root3 = sqrt_i(Interval(3.0, 3.0))
    return PolygonStage(0, 3, root3.scale2(-1), Interval(0.5, 0.5), root3)


def polygon_stage_advance(s: PolygonStage) -> PolygonStage:
    """Halve the angle: pi/n -> pi/(2n).

    cos(t/2) = sqrt((1 + cos t)/2)
    sin(t/2) = sqrt((1 - cos t)/2) = sin t / sqrt(2 (1 + cos t))
    tan(t/2) = sin t / (1 + cos t)

    Each quantity is the intersection of every form available. The
    subtraction-free sine form is the one that survives once 1 - cos t
    cancels; the direct form is tighter for the first few stages.
    """
    if s.k >= MAX_K:
        raise DepthExceeded(f"stage k={s.k} is at the precision floor k={MAX_K}")
    one_plus_cos = 1.0 + s.cos_enc
    one_minus_cos = (1.0 - s.cos_enc).intersect(_SIN_RANGE)
    c = sqrt_i(one_plus_cos.scale2(-1)).intersect(_COS_RANGE)
    sn = (
        sqrt_i(one_minus_cos.scale2(-1))
        .intersect(s.sin_enc / sqrt_i(one_plus_cos.scale2(1)))
        .intersect(_SIN_RANGE)
    )
    tn = (s.sin_enc / one_plus_cos).intersect(sn / c)
    return PolygonStage(s.k + 1, 2 * s.n, sn, c, tn)


def polygon_stage(k: int) -> PolygonStage:
    s = polygon_stage_seed()
    for _ in range(k):
        s = polygon_stage_advance(s)
    return s


def _check_radius(R: float) -> None:
    if not R > 0.0:
        raise NonpositiveRadius(f"radius must be > 0, got {R!r}")


def inscribed_polygon_area(s: PolygonStage, R: float) -> Interval:
    """n * (1/2) R^2 sin(2 pi/n), written as n R^2 sin(pi/n) cos(pi/n)."""
    _check_radius(R)
    r2 = Interval(R, R).square()
    return s.times_n(r2 * s.sin_enc * s.cos_enc)


def pi_bracket(s: PolygonStage) -> Interval:
    """``[n sin(pi/n), n tan(pi/n)]``, i.e. sin t < t < tan t at t = pi/n, times n."""
    return Interval(s.times_n(s.sin_enc).lo, s.times_n(s.tan_enc).hi)


def pi_enclosure(target_width: float, max_k: int = MAX_K) -> PiEnclosure:
    """Advance stages until the bracket is at most ``target_width`` wide.

    Widths down to ``MIN_TARGET_WIDTH`` are reachable in double precision.
    """
    if not target_width > 0.0:
        raise InvalidArgument(f"target width must be > 0, got {target_width!r}")
    s = polygon_stage_seed()
    while True:
        value = pi_bracket(s)
        if s.k >= 1:
            value = value.intersect(HEXAGON_BRACKET)
        width = value.hi - value.lo
        if width <= target_width:
            return PiEnclosure(value, s.k, width)
        if s.k >= max_k:
            raise DepthExceeded(
                f"width {width:.3g} at k={s.k} still exceeds target {target_width:g}"
            )
        s = polygon_stage_advance(s)


def trapezoid_sector_scheme(s: PolygonStage, r: float, k_stretch: float) -> TrapezoidScheme:
    """Stretched-sector construction with outer radius ``R = k_stretch * r``.

    One trapezoid has bases 2R sin(pi/n), 2r sin(pi/n) and height
    (R - r) cos(pi/n); its area equals c_n (k^2 - 1) with
    c_n = sin(pi/n) cos(pi/n) r^2, so the sector total is n c_n.
    """
    _check_radius(r)
    if not k_stretch > 1.0:
        raise InvalidStretch(f"stretch factor must be > 1, got {k_stretch!r}")
    ri = Interval(r, r)
    R = ri * k_stretch
    sn, cs = s.sin_enc, s.cos_enc
    big_base = 2.0 * R * sn
    small_base = 2.0 * ri * sn
    height = R * cs - ri * cs
    one_trapezoid = 0.5 * (big_base + small_base) * height
    factor = Interval(k_stretch, k_stretch).square() - 1.0
    sector = sn * cs * ri.square()
    return TrapezoidScheme(
        c_total=s.times_n(sector),
        trapezoid=s.times_n(one_trapezoid),
        between_sectors_factor=factor,
        sector=sector,
    )


def annulus_area(R: float, r: float, pi: PiEnclosure) -> tuple[Interval, Interval]:
    """Return ``(unrolled, direct)``: (1/2)(2 pi R + 2 pi r)(R - r) and pi (R^2 - r^2)."""
    if r < 0.0 or not R > r:
        raise InvalidRadii(f"need R > r >= 0, got R={R!r}, r={r!r}")
    p = pi.value
    Ri, ri = Interval(R, R), Interval(r, r)
    unrolled = 0.5 * (2.0 * p * Ri + 2.0 * p * ri) * (Ri - ri)
    direct = p * (Ri.square() - ri.square())
    return unrolled, direct


def circle_area(R: float, pi: PiEnclosure) -> Interval:
    _check_radius(R)
    return pi.value * Interval(R, R).square()


def sector_area(theta: float, R: float, pi: PiEnclosure) -> Interval:
    """(1/2) theta R^2. Only defined downstream of a certified pi."""
    _check_radius(R)
    full_turn = 2.0 * pi.value.hi * (1 + 1e-15)
    if not 0.0 <= theta <= full_turn:
        raise ThetaOutOfRange(f"theta {theta!r} outside [0, {full_turn!r}]")
    return 0.5 * Interval(theta, theta) * Interval(R, R).square()
