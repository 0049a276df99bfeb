"""Certified enclosures for a non-circular derivation of the area inside a circle.

Modules
-------
interval
    Outward-rounded interval arithmetic.
ctrig
    Series-based enclosures of sin, cos, tan, sinc and the gap functions.
squeeze
    Pointwise squeeze-chain checks, cell verification of sin < x < tan,
    epsilon-delta witnesses for sin(x)/x -> 1.
area_pi
    Polygon and trapezoid area schemes, pi bracket, annulus and sector areas.
convergence
    Approximation tables, order estimates, Richardson extrapolation.
cli
    ``circlearea`` command.
"""

from circlearea._backend import BACKEND
from circlearea.area_pi import (
    PiEnclosure,
    PolygonStage,
    annulus_area,
    circle_area,
    inscribed_polygon_area,
    pi_bracket,
    pi_enclosure,
    polygon_stage,
    polygon_stage_advance,
    polygon_stage_seed,
    sector_area,
    trapezoid_sector_scheme,
)
from circlearea.convergence import ConvergenceRecord, estimate_order, richardson, sequence_table
from circlearea.ctrig import (
    cos_enc,
    gap_sin_minus_theta_cos,
    gap_theta_minus_sin,
    one_minus_cos_enc,
    sin_enc,
    sinc_enc,
    tan_enc,
)
from circlearea.interval import Interval, arith, inspect, make, sqrt_i
from circlearea.squeeze import (
    BoundsReport,
    VerificationSummary,
    sinc_squeeze_limit,
    theorem1_bounds,
    verify_theorem1,
    verify_theorem2,
)

__version__ = "0.1.0"
