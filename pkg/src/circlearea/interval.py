"""Outward-rounded interval arithmetic.

Endpoints are computed in round-to-nearest and then pushed one ulp outward
(``nextafter``). Round-to-nearest is off by at most half an ulp for
``+ - * /`` and ``sqrt``, so a single step restores containment.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Union

from circlearea._backend import kernels as _k
from circlearea.errors import InvalidEndpoints, NegativeArgument, ZeroInDivisor

Real = Union[int, float]


@dataclass(frozen=True, slots=True)
class Interval:
    """Closed interval ``[lo, hi]`` of finite doubles."""

    lo: float
    hi: float

    def __post_init__(self):
        lo, hi = self.lo, self.hi
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InvalidEndpoints(f"endpoints must be finite, got [{lo!r}, {hi!r}]")
        if lo > hi:
            raise InvalidEndpoints(f"lo > hi in [{lo!r}, {hi!r}]")
        object.__setattr__(self, "lo", float(lo))
        object.__setattr__(self, "hi", float(hi))

    @classmethod
    def point(cls, x: Real) -> Interval:
        return cls(x, x)

    @property
    def width(self) -> float:
        """``hi - lo`` rounded up."""
        w = self.hi - self.lo
        if Fraction(w) >= Fraction(self.hi) - Fraction(self.lo):
            return w
        return _k.up(w)

    @property
    def midpoint(self) -> float:
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x: Real) -> bool:
        return self.lo <= x <= self.hi

    def is_point(self) -> bool:
        return self.lo == self.hi

    def subset_of(self, other: Interval) -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: Interval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: Interval) -> Interval:
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def intersect(self, other: Interval) -> Interval:
        """Intersection; raises :class:`InvalidEndpoints` when disjoint."""
        return Interval(max(self.lo, other.lo), min(self.hi, other.hi))

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def _binary(self, op, other, reflected=False):
        if isinstance(other, (int, float)):
            other = Interval(other, other)
        elif not isinstance(other, Interval):
            return NotImplemented
        return arith(op, other, self) if reflected else arith(op, self, other)

    def __add__(self, other):
        return self._binary("add", other)

    def __radd__(self, other):
        return self._binary("add", other, reflected=True)

    def __sub__(self, other):
        return self._binary("sub", other)

    def __rsub__(self, other):
        return self._binary("sub", other, reflected=True)

    def __mul__(self, other):
        return self._binary("mul", other)

    def __rmul__(self, other):
        return self._binary("mul", other, reflected=True)

    def __truediv__(self, other):
        return self._binary("div", other)

    def __rtruediv__(self, other):
        return self._binary("div", other, reflected=True)

    def square(self) -> Interval:
        """Tighter than ``self * self`` when the interval straddles zero."""
        if self.lo >= 0.0 or self.hi <= 0.0:
            a = abs(self.lo)
            b = abs(self.hi)
            lo, hi = min(a, b), max(a, b)
            return Interval(*_k.mul(lo, hi, lo, hi))
        m = self.mag
        return Interval(0.0, _k.up(m * m))

    def scale2(self, e: int) -> Interval:
        """Multiply by ``2**e``; exact unless the result leaves the normal range."""
        lo, hi = math.ldexp(self.lo, e), math.ldexp(self.hi, e)
        if math.ldexp(lo, -e) != self.lo:
            lo = _k.down(lo)
        if math.ldexp(hi, -e) != self.hi:
            hi = _k.up(hi)
        return Interval(lo, hi)

    def to_csv(self) -> str:
        return f"{fmt(self.lo)},{fmt(self.hi)}"

    def __repr__(self) -> str:
        return f"Interval({self.lo!r}, {self.hi!r})"


def make(lo: Real, hi: Real) -> Interval:
    """Exact construction; never inflates."""
    return Interval(lo, hi)


_OPS = {"add": _k.add, "sub": _k.sub, "mul": _k.mul, "div": _k.div}


def arith(op: str, a: Interval, b: Interval) -> Interval:
    """Apply ``op`` in ``{"add", "sub", "mul", "div"}`` with outward rounding."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown interval op {op!r}") from None
    if op == "div" and b.lo <= 0.0 <= b.hi:
        raise ZeroInDivisor(f"divisor {b!r} contains zero")
    return Interval(*fn(a.lo, a.hi, b.lo, b.hi))


def sqrt_i(a: Interval) -> Interval:
    if a.lo < 0.0:
        raise NegativeArgument(f"sqrt of {a!r} with negative lower endpoint")
    return Interval(*_k.sqrt_out(a.lo, a.hi))


class IntervalInfo(NamedTuple):
    width: float
    midpoint: float
    contains: Callable[[Real], bool]


def inspect(a: Interval) -> IntervalInfo:
    return IntervalInfo(a.width, a.midpoint, a.contains)


def fmt(x: Real) -> str:
    """17 significant digits; round-trips any double exactly."""
    if isinstance(x, int):
        return str(x)
    return format(x, ".17g")
