"""Certified checks of the sinc squeeze chain and of sin < theta < tan.

The chain ``1 < theta/sin(theta) < 1/cos(theta) + sqrt((1-cos)/(1+cos))`` is
checked pointwise with certified enclosures. The bound ``sin < theta < tan``
is certified on whole cells through the two gap functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from circlearea._backend import kernels as _k
from circlearea.ctrig import (
    GAP_CAP,
    cos_enc,
    gap_sin_minus_theta_cos,
    gap_theta_minus_sin,
    one_minus_cos_enc,
    sin_enc,
)
from circlearea.errors import CannotCertify, DomainExceeded, InvalidArgument, NotPointEnough
from circlearea.interval import Interval, fmt, sqrt_i

POINT_WIDTH_CAP = 1e-6
CHAIN_CAP = 1.5
DELTA_FLOOR = 1e-14
ONE = Interval(1.0, 1.0)

SUMMARY_COLUMNS = (
    "domain_lo",
    "domain_hi",
    "cells",
    "verified_cells",
    "max_refinement_depth",
    "worst_margin",
)


@dataclass(frozen=True)
class BoundsReport:
    """Chain members at ``theta``.

    ``ratio_excess`` and ``upper_excess`` enclose ``ratio - 1`` and
    ``upper - 1`` directly; ``verified`` and ``margin`` are decided on them,
    which stays meaningful when both members sit within an ulp of 1.
    """

    theta: Interval
    lower: Interval
    ratio: Interval
    upper: Interval
    verified: bool
    margin: float
    ratio_excess: Interval
    upper_excess: Interval


@dataclass(frozen=True)
class VerificationSummary:
    domain: Interval
    cells: int
    verified_cells: int
    max_refinement_depth: int
    worst_margin: float
    derivative_signs_ok: bool = True

    @property
    def all_verified(self) -> bool:
        return self.verified_cells == self.cells

    def csv_row(self) -> list[str]:
        return [
            fmt(self.domain.lo),
            fmt(self.domain.hi),
            str(self.cells),
            str(self.verified_cells),
            str(self.max_refinement_depth),
            fmt(self.worst_margin),
        ]


def ratio_excess_at(t: float) -> Interval:
    """Enclosure of ``t/sin(t) - 1 = (t - sin t)/sin t`` at a point."""
    x = Interval(t, t)
    return gap_theta_minus_sin(x) / sin_enc(x)


def upper_excess_at(t: float) -> Interval:
    """Enclosure of ``1/cos t + sqrt((1 - cos t)/(1 + cos t)) - 1`` at a point.

    Uses ``1/cos - 1 = (1 - cos)/cos`` with ``1 - cos`` from its own series;
    subtracting a cos enclosure from 1 leaves only rounding noise below 1e-8.
    """
    x = Interval(t, t)
    c = cos_enc(x)
    omc = one_minus_cos_enc(x)
    return omc / c + sqrt_i(omc / (1.0 + c))


def theorem1_bounds(theta: Interval) -> BoundsReport:
    """Certify ``1 < theta/sin(theta) < upper(theta)`` on a near-point interval.

    Both ``theta/sin(theta)`` and the upper bound increase on (0, pi/2), so the
    two endpoints bound the members over the whole (narrow) interval.
    """
    if not (0.0 < theta.lo and theta.hi <= CHAIN_CAP):
        raise DomainExceeded(f"theta {theta!r} must lie in (0, {CHAIN_CAP}]")
    if theta.width > POINT_WIDTH_CAP:
        raise NotPointEnough(f"theta width {theta.width:g} exceeds {POINT_WIDTH_CAP:g}")
    a, b = theta.lo, theta.hi
    if a == b:
        r_ex = ratio_excess_at(a)
        u_ex = upper_excess_at(a)
    else:
        r_ex = Interval(ratio_excess_at(a).lo, ratio_excess_at(b).hi)
        u_ex = Interval(upper_excess_at(a).lo, upper_excess_at(b).hi)
    verified = 0.0 < r_ex.lo and r_ex.hi < u_ex.lo
    margin = _k.down(min(r_ex.lo, u_ex.lo - r_ex.hi))
    return BoundsReport(theta, ONE, ONE + r_ex, ONE + u_ex, verified, margin, r_ex, u_ex)


def verify_theorem1(domain: Interval, points: int) -> VerificationSummary:
    """Run the chain check at ``points`` evenly spaced angles across ``domain``."""
    if points < 1:
        raise InvalidArgument("points must be >= 1")
    lo, hi = domain.lo, domain.hi
    verified = 0
    worst = float("inf")
    for i in range(points):
        t = hi if i == points - 1 and points > 1 else lo + (hi - lo) * (i / max(points - 1, 1))
        rep = theorem1_bounds(Interval(t, t))
        verified += rep.verified
        worst = min(worst, rep.margin)
    return VerificationSummary(domain, points, verified, 0, worst)


def _gap_margin(a: float) -> float:
    x = Interval(a, a)
    return min(gap_theta_minus_sin(x).lo, gap_sin_minus_theta_cos(x).lo)


def _derivative_signs_ok(m: float) -> bool:
    # f' = cos - 1 <= 0 and g' = sec^2 - 1 = (1 - cos)(1 + cos)/cos^2 >= 0
    x = Interval(m, m)
    omc = one_minus_cos_enc(x)
    c = cos_enc(x)
    sec2_minus_1 = omc * (1.0 + c) / c.square()
    return omc.lo >= 0.0 and sec2_minus_1.lo >= 0.0


def _certify_cell(a: float, b: float, depth: int, max_depth: int) -> tuple[bool, float, int]:
    # Both gaps are nondecreasing on [0, 1.5] (derivatives 1 - cos and
    # theta*sin are >= 0), i.e. gap(theta) = gap(a) + integral_a^theta gap'
    # >= gap(a). A positive enclosure at the left endpoint covers the cell.
    margin = _gap_margin(a)
    if a > 0.0 and margin > 0.0:
        return True, margin, depth
    m = a + (b - a) / 2
    if depth >= max_depth or not (a < m < b):
        return False, margin, depth
    ok_l, marg_l, d_l = _certify_cell(a, m, depth + 1, max_depth)
    ok_r, marg_r, d_r = _certify_cell(m, b, depth + 1, max_depth)
    return ok_l and ok_r, min(marg_l, marg_r), max(d_l, d_r)


def verify_theorem2(domain: Interval, initial_cells: int, max_depth: int) -> VerificationSummary:
    """Certify ``sin(theta) < theta < tan(theta)`` cell by cell over ``domain``.

    Failing cells are bisected up to ``max_depth``. Cells are processed in
    order and folded deterministically.
    """
    if not (0.0 <= domain.lo < domain.hi <= GAP_CAP):
        raise DomainExceeded(f"domain {domain!r} must satisfy 0 <= lo < hi <= {GAP_CAP}")
    if initial_cells < 1:
        raise InvalidArgument("initial_cells must be >= 1")
    if max_depth < 0:
        raise InvalidArgument("max_depth must be >= 0")
    lo, hi = domain.lo, domain.hi
    edges = [lo + (hi - lo) * (i / initial_cells) for i in range(initial_cells)] + [hi]
    verified = 0
    deepest = 0
    worst = float("inf")
    signs_ok = True
    for a, b in zip(edges, edges[1:]):
        ok, margin, depth = _certify_cell(a, b, 0, max_depth)
        verified += ok
        deepest = max(deepest, depth)
        worst = min(worst, margin)
        signs_ok = signs_ok and _derivative_signs_ok(a + (b - a) / 2)
    return VerificationSummary(domain, initial_cells, verified, deepest, worst, signs_ok)


def sinc_squeeze_limit(epsilon: float) -> tuple[float, BoundsReport]:
    """Find delta with ``|sin(t)/t - 1| < epsilon`` certified for all t in (0, delta].

    From the verified chain, ``0 < 1 - sin(t)/t < 1 - 1/upper(t) < upper(t) - 1``,
    and ``upper`` increases in t, so the single check ``upper(delta) - 1 <
    epsilon`` covers the whole interval. Delta is located by bisection.
    """
    if not (1e-12 <= epsilon <= 0.1):
        raise InvalidArgument(f"epsilon {epsilon!r} outside [1e-12, 0.1]")

    def certify(d: float) -> BoundsReport | None:
        rep = theorem1_bounds(Interval(d, d))
        if rep.verified and rep.upper_excess.hi < epsilon:
            return rep
        return None

    lo, hi = DELTA_FLOOR, CHAIN_CAP
    best = certify(lo)
    if best is None:
        raise CannotCertify(f"no delta >= {DELTA_FLOOR:g} certifies epsilon {epsilon!r}")
    while hi - lo >= lo / 16:
        mid = lo + (hi - lo) / 2
        rep = certify(mid)
        if rep is not None:
            lo, best = mid, rep
        else:
            hi = mid
    return lo, best
