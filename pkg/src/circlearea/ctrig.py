"""Certified enclosures of sin, cos, tan, sinc and the two gap functions.

Each point value comes from a truncated alternating power series whose
remainder is bounded by the first omitted term. Wide inputs are handled by
evaluating endpoints and using monotonicity on the capped domain, never by
interval-evaluating a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from circlearea import _pykernels as _kinds
from circlearea._backend import kernels as _k
from circlearea.errors import CosineMayVanish, DomainExceeded, ZeroInDivisor
from circlearea.interval import Interval

TRIG_CAP = 2.0
TAN_CAP = 1.5
GAP_CAP = 1.5
# cos(1.5707) > 0 is certified in the test suite, so sin increases on [0, 1.5707]
SIN_MONOTONE_LIMIT = 1.5707


@dataclass(frozen=True)
class SeriesEnclosure:
    value: Interval
    terms_used: int
    remainder_bound: float


def series_enclosure(kind: int, x: float) -> SeriesEnclosure:
    """Raw series evaluation at a nonnegative point; no domain checks."""
    lo, hi, used, rem = _k.series(kind, x)
    return SeriesEnclosure(Interval(lo, hi), used, rem)


def _point(kind: int, x: float) -> Interval:
    lo, hi, _, _ = _k.series(kind, x)
    return Interval(lo, hi)


def _check(x: Interval, cap: float, name: str, nonneg: bool = False) -> None:
    if nonneg and x.lo < 0.0:
        raise DomainExceeded(f"{name}: argument {x!r} must be nonnegative")
    if x.lo < -cap or x.hi > cap:
        raise DomainExceeded(f"{name}: argument {x!r} outside |x| <= {cap}")


def _even(f: Callable[[float, float], Interval], x: Interval) -> Interval:
    if x.lo >= 0.0:
        return f(x.lo, x.hi)
    if x.hi <= 0.0:
        return f(-x.hi, -x.lo)
    return f(0.0, -x.lo).hull(f(0.0, x.hi))


def _odd(f: Callable[[float, float], Interval], x: Interval) -> Interval:
    if x.lo >= 0.0:
        return f(x.lo, x.hi)
    if x.hi <= 0.0:
        return -f(-x.hi, -x.lo)
    return (-f(0.0, -x.lo)).hull(f(0.0, x.hi))


def _increasing(kind: int) -> Callable[[float, float], Interval]:
    def f(a: float, b: float) -> Interval:
        if a == b:
            return _point(kind, a)
        return Interval(_point(kind, a).lo, _point(kind, b).hi)

    return f


def _decreasing(kind: int) -> Callable[[float, float], Interval]:
    def f(a: float, b: float) -> Interval:
        if a == b:
            return _point(kind, a)
        return Interval(_point(kind, b).lo, _point(kind, a).hi)

    return f


def _sin_nonneg(a: float, b: float) -> Interval:
    if a == b:
        return _point(_kinds.SIN, a)
    sa, sb = _point(_kinds.SIN, a), _point(_kinds.SIN, b)
    if b <= SIN_MONOTONE_LIMIT or _point(_kinds.COS, b).lo > 0.0:
        return Interval(sa.lo, sb.hi)
    if _point(_kinds.COS, a).hi < 0.0:
        return Interval(sb.lo, sa.hi)
    # the maximum of sin may lie inside
    return Interval(min(sa.lo, sb.lo), 1.0)


_cos_nonneg = _decreasing(_kinds.COS)
_sinc_nonneg = _decreasing(_kinds.SINC)
_one_minus_cos_nonneg = _increasing(_kinds.ONE_MINUS_COS)
_gap1 = _increasing(_kinds.THETA_MINUS_SIN)
_gap2 = _increasing(_kinds.SIN_MINUS_THETA_COS)


def sin_enc(x: Interval) -> Interval:
    _check(x, TRIG_CAP, "sin")
    return _odd(_sin_nonneg, x)


def cos_enc(x: Interval) -> Interval:
    """cos decreases on [0, 2]; even symmetry covers negative arguments."""
    _check(x, TRIG_CAP, "cos")
    return _even(_cos_nonneg, x)


def one_minus_cos_enc(x: Interval) -> Interval:
    """``1 - cos x`` from its own series, free of cancellation near 0."""
    _check(x, TRIG_CAP, "1-cos")
    return _even(_one_minus_cos_nonneg, x)


def tan_enc(x: Interval) -> Interval:
    _check(x, TAN_CAP, "tan")
    c = cos_enc(x)
    try:
        return sin_enc(x) / c
    except ZeroInDivisor:
        raise CosineMayVanish(f"cos enclosure {c!r} contains zero") from None


def sinc_enc(x: Interval) -> Interval:
    """sin(t)/t with value 1 at t = 0; the series needs no special case there."""
    _check(x, TRIG_CAP, "sinc")
    return _even(_sinc_nonneg, x)


def gap_theta_minus_sin(x: Interval) -> Interval:
    """theta - sin(theta), nondecreasing on [0, 1.5]."""
    _check(x, GAP_CAP, "theta - sin", nonneg=True)
    return _gap1(x.lo, x.hi)


def gap_sin_minus_theta_cos(x: Interval) -> Interval:
    """sin(theta) - theta*cos(theta), nondecreasing on [0, 1.5]."""
    _check(x, GAP_CAP, "sin - theta cos", nonneg=True)
    return _gap2(x.lo, x.hi)
