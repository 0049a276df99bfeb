"""Approximation tables, empirical convergence orders, Richardson extrapolation.

Errors are measured against the package's own certified pi enclosure, so no
reference constant enters the tables.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass

from circlearea._backend import kernels as _k
from circlearea.area_pi import (
    DEFAULT_PI_WIDTH,
    circle_area,
    inscribed_polygon_area,
    pi_enclosure,
    polygon_stage_advance,
    polygon_stage_seed,
    trapezoid_sector_scheme,
)
from circlearea.errors import InsufficientData, InvalidArgument
from circlearea.interval import Interval, fmt

SCHEMES = ("inscribed", "trapezoid")
MAX_TABLE_K = 30
# any stretch > 1 gives the same sector total
TABLE_STRETCH = 2.0
# error bounds within this multiple of the enclosure widths count as floor
FLOOR_FACTOR = 8.0

TABLE_COLUMNS = ("k", "n", "value_lo", "value_hi", "abs_error_bound", "local_order")


@dataclass(frozen=True)
class ConvergenceRecord:
    k: int
    n: int
    value: Interval
    abs_error_bound: float
    local_order: float | None
    reference: Interval

    def at_floor(self) -> bool:
        return self.abs_error_bound <= FLOOR_FACTOR * (self.value.width + self.reference.width)

    def csv_row(self) -> list[str]:
        order = "" if self.local_order is None else fmt(self.local_order)
        return [
            str(self.k),
            str(self.n),
            fmt(self.value.lo),
            fmt(self.value.hi),
            fmt(self.abs_error_bound),
            order,
        ]


def _error_bound(value: Interval, reference: Interval) -> float:
    # sup |a - b| over a in value, b in reference
    return (value - reference).mag


def _local_order(prev: float, cur: float) -> float | None:
    if prev > 0.0 and cur > 0.0:
        return math.log2(prev / cur)
    return None


def _with_orders(k_n_values: list[tuple[int, int, Interval]], reference: Interval) -> list[ConvergenceRecord]:
    records: list[ConvergenceRecord] = []
    prev = None
    for k, n, value in k_n_values:
        err = _error_bound(value, reference)
        order = None if prev is None else _local_order(prev, err)
        records.append(ConvergenceRecord(k, n, value, err, order, reference))
        prev = err
    return records


def sequence_table(
    scheme: str,
    k_max: int,
    R: float = 1.0,
    reference_width: float = DEFAULT_PI_WIDTH,
) -> list[ConvergenceRecord]:
    """One record per stage k = 0..k_max for the chosen area scheme.

    Errors are bounded against ``pi * R**2`` built from
    ``pi_enclosure(reference_width)``.
    """
    if scheme not in SCHEMES:
        raise InvalidArgument(f"scheme must be one of {SCHEMES}, got {scheme!r}")
    if not 0 <= k_max <= MAX_TABLE_K:
        raise InvalidArgument(f"k_max must be in [0, {MAX_TABLE_K}], got {k_max!r}")
    reference = circle_area(R, pi_enclosure(reference_width))
    rows = []
    s = polygon_stage_seed()
    for k in range(k_max + 1):
        if k:
            s = polygon_stage_advance(s)
        if scheme == "inscribed":
            value = inscribed_polygon_area(s, R)
        else:
            value = trapezoid_sector_scheme(s, R, TABLE_STRETCH).c_total
        rows.append((s.k, s.n, value))
    return _with_orders(rows, reference)


def estimate_order(records: list[ConvergenceRecord]) -> float:
    """Median of log2(e_k / e_{k+1}) over the last half of ``records``.

    Pairs whose finer error has hit the rounding floor, or that show no
    progress, are dropped.
    """
    positive = [r for r in records if r.abs_error_bound > 0.0]
    if len(positive) < 4 or len(positive) != len(records):
        raise InsufficientData("need at least 4 records, all with positive error bounds")
    tail = records[len(records) // 2 :]
    orders = [
        math.log2(a.abs_error_bound / b.abs_error_bound)
        for a, b in zip(tail, tail[1:])
        if not b.at_floor() and a.abs_error_bound > b.abs_error_bound
    ]
    if len(orders) < 2:
        raise InsufficientData(f"only {len(orders)} usable record pairs above the rounding floor")
    return statistics.median(orders)


def richardson(records: list[ConvergenceRecord], order: float) -> list[ConvergenceRecord]:
    """Combine consecutive records as ``(2^p A_2n - A_n) / (2^p - 1)``.

    Each accelerated record is labelled with the finer side count and its
    error is re-measured against the same reference.
    """
    if len(records) < 2:
        raise InsufficientData("Richardson extrapolation needs at least 2 records")
    if not order > 0.0:
        raise InvalidArgument(f"order must be > 0, got {order!r}")
    w = 2.0**order
    weight = Interval(_k.down(w), _k.up(w)) if w != math.ldexp(1.0, round(order)) else Interval(w, w)
    denom = weight - 1.0
    rows = [
        (fine.k, fine.n, (weight * fine.value - coarse.value) / denom)
        for coarse, fine in zip(records, records[1:])
    ]
    return _with_orders(rows, records[0].reference)
