"""Distance distribution between a random-waypoint mobile node confined to
a regular hexagon and an arbitrary fixed reference node.

Analytic per-axis marginals and the distance CDF live alongside a seeded
RWP simulator so each side can validate the other.
"""

__version__ = "0.1.0"

from .hexgeom import HexRegion, Point2, RefNode, SQRT3
from .piecewise import DomainError, PiecewisePolynomial
from .marginals import (
    AxisMarginal,
    axis_marginal,
    expected_leg_x,
    expected_leg_y,
    expected_lx,
    expected_ly,
    shifted_pdf_dx,
    shifted_pdf_dy,
    stationary_cdf_x,
    stationary_cdf_y,
    stationary_pdf_x,
    stationary_pdf_y,
    waypoint_pdf_x,
    waypoint_pdf_y,
)
from .distance import (
    CdfCurve,
    QuadratureError,
    QuadratureSpec,
    distance_cdf,
    distance_cdf_curve,
    product_mass_hexagon,
)
from .sim import (
    EmpiricalCdf,
    SimConfig,
    Trace,
    distances_to,
    ecdf,
    ks_statistic,
    simulate,
    uniform_node_distances,
)

__all__ = [name for name in dir() if not name.startswith("_")]
