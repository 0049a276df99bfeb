import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circlearea.errors import InvalidEndpoints, NegativeArgument, ZeroInDivisor
from circlearea.interval import Interval, arith, fmt, inspect, make, sqrt_i

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False, allow_infinity=False)
positive = st.floats(min_value=1e-6, max_value=1e6)


@st.composite
def intervals(draw, elements=finite):
    a, b = draw(elements), draw(elements)
    return Interval(min(a, b), max(a, b))


@st.composite
def nested(draw, elements=finite):
    """(inner, outer) with inner a subset of outer."""
    outer = draw(intervals(elements))
    a = draw(st.floats(min_value=outer.lo, max_value=outer.hi))
    b = draw(st.floats(min_value=outer.lo, max_value=outer.hi))
    return Interval(min(a, b), max(a, b)), outer


def ulp_slack(x, k):
    return k * math.ulp(abs(x))


class TestMake:
    def test_identity(self):
        a = make(1, 2)
        assert (a.lo, a.hi) == (1.0, 2.0)

    def test_point(self):
        a = make(3, 3)
        assert a.is_point() and a.lo == 3.0

    @pytest.mark.parametrize("lo,hi", [(2, 1), (math.nan, 1), (0, math.inf), (-math.inf, 0)])
    def test_invalid(self, lo, hi):
        with pytest.raises(InvalidEndpoints):
            make(lo, hi)


class TestArith:
    def test_add(self):
        r = arith("add", make(1, 2), make(3, 4))
        assert r.lo <= 4 and r.hi >= 6
        assert r.width <= 2 + ulp_slack(6, 4)

    def test_mul_mixed_sign(self):
        r = arith("mul", make(-1, 2), make(3, 4))
        assert r.lo <= -4 and r.hi >= 8

    def test_div(self):
        r = arith("div", make(1, 2), make(4, 4))
        assert r.lo <= 0.25 and r.hi >= 0.5

    def test_div_by_zero_straddle(self):
        with pytest.raises(ZeroInDivisor):
            arith("div", make(1, 2), make(-1, 1))

    def test_div_by_interval_touching_zero(self):
        with pytest.raises(ZeroInDivisor):
            arith("div", make(1, 2), make(0, 1))

    def test_unknown_op(self):
        with pytest.raises(ValueError):
            arith("pow", make(1, 2), make(1, 2))

    def test_inflates_by_at_least_one_ulp(self):
        r = arith("add", make(1, 1), make(2, 2))
        assert r.lo < 3.0 < r.hi

    def test_operators_accept_scalars(self):
        a = make(1, 2)
        assert (2 * a).contains(4) and (a + 1).contains(3) and (1 - a).contains(-1) and (1 / a).contains(0.5)


class TestSqrt:
    def test_basic(self):
        r = sqrt_i(make(4, 9))
        assert r.lo <= 2 and r.hi >= 3

    def test_zero(self):
        r = sqrt_i(make(0, 0))
        assert r.lo == 0.0 and 0.0 <= r.hi <= 5e-324

    def test_negative(self):
        with pytest.raises(NegativeArgument):
            sqrt_i(make(-1, 4))


class TestInspect:
    def test_width(self):
        assert inspect(make(1, 2)).width == 1

    def test_contains(self):
        assert inspect(make(3, 3)).contains(3)
        assert not inspect(make(0, 1)).contains(2)

    def test_width_rounds_up_when_inexact(self):
        a = make(-1e-20, 1.0)
        assert Fraction(a.width) >= Fraction(a.hi) - Fraction(a.lo)

    def test_midpoint_inside(self):
        a = make(1e308, 1.7e308)
        assert a.lo <= inspect(a).midpoint <= a.hi


def test_csv_round_trip():
    a = make(0.1, 2 / 3)
    lo, hi = a.to_csv().split(",")
    assert float(lo) == a.lo and float(hi) == a.hi
    assert fmt(3) == "3"


def test_scale2_exact():
    a = make(0.1, 0.3).scale2(5)
    assert (a.lo, a.hi) == (0.1 * 32, 0.3 * 32)


def test_scale2_underflow_stays_outward():
    a = make(3e-320, 5e-320).scale2(-3)
    assert Fraction(a.lo) <= Fraction(3e-320) / 8 and Fraction(a.hi) >= Fraction(5e-320) / 8


@given(intervals(), intervals(), st.sampled_from(["add", "sub", "mul"]), st.floats(0, 1), st.floats(0, 1))
def test_containment_property(a, b, op, u, v):
    x = a.lo + (a.hi - a.lo) * u
    y = b.lo + (b.hi - b.lo) * v
    x, y = min(max(x, a.lo), a.hi), min(max(y, b.lo), b.hi)
    exact = {"add": Fraction(x) + Fraction(y), "sub": Fraction(x) - Fraction(y), "mul": Fraction(x) * Fraction(y)}[op]
    r = arith(op, a, b)
    assert Fraction(r.lo) <= exact <= Fraction(r.hi)


@given(nested(), nested(positive), st.sampled_from(["add", "sub", "mul", "div"]))
def test_inclusion_monotonicity(pair_a, pair_b, op):
    (a, a2), (b, b2) = pair_a, pair_b
    assert arith(op, a, b).subset_of(arith(op, a2, b2))


@given(finite, st.floats(min_value=1e-3, max_value=1e6), st.sampled_from(["add", "sub", "mul", "div"]))
def test_point_consistency(x, y, op):
    r = arith(op, make(x, x), make(y, y))
    scalar = {"add": x + y, "sub": x - y, "mul": x * y, "div": x / y}[op]
    assert r.width <= 4 * math.ulp(abs(scalar)) or r.width <= 4 * 5e-324


@settings(max_examples=300)
@given(intervals(st.floats(min_value=0, max_value=1e6)))
def test_sqrt_round_trip(a):
    assert a.subset_of(sqrt_i(a).square())
