"""Stationary per-axis marginals of a random-waypoint node in the hexagon.

Each axis follows the same construction: the waypoint (leg endpoint)
density is the area-ratio marginal of the uniform distribution on the
hexagon; the stationary CDF is the ratio of the expected leg portion below
a coordinate to the expected leg length; the stationary PDF is its
derivative.  All branch coefficients are produced by exact Fraction
integration in :mod:`rwphex._exact` rather than copied from derived
formulas, so a transcription slip in either place shows up as a test
failure instead of silently propagating.

The y-axis is handled in the rescaled coordinate u = y / (sqrt(3) a), in
which its waypoint density has rational coefficients; results are mapped
back by argument scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from ._exact import S, add, const, leg_expectations, mul, variable, coefficients
from .hexgeom import SQRT3
from .piecewise import DomainError, PiecewisePolynomial

__all__ = [
    "AxisMarginal",
    "axis_marginal",
    "waypoint_pdf_x",
    "waypoint_pdf_y",
    "expected_leg_x",
    "expected_leg_y",
    "expected_lx",
    "expected_ly",
    "stationary_pdf_x",
    "stationary_pdf_y",
    "stationary_cdf_x",
    "stationary_cdf_y",
    "shifted_pdf_dx",
    "shifted_pdf_dy",
]

F = Fraction

# Waypoint densities at unit side, as polynomials in the start coordinate.
# x-axis: triangular ramps over [0, 1/2] and [3/2, 2] around a flat middle.
_X_BREAKS = [F(0), F(1, 2), F(3, 2), F(2)]
_X_PIECES = [
    mul(const(F(4, 3)), variable(S)),                         # 4s/3
    const(F(2, 3)),                                           # 2/3
    add(const(F(8, 3)), mul(const(F(-4, 3)), variable(S))),   # 4(2-s)/3
]
# y-axis in u = y/sqrt(3): trapezoid rising to u = 1/2 then falling.
_U_BREAKS = [F(0), F(1, 2), F(1)]
_U_PIECES = [
    add(const(F(2, 3)), mul(const(F(4, 3)), variable(S))),    # 2(1+2u)/3
    add(const(F(2)), mul(const(F(-4, 3)), variable(S))),      # (6-4u)/3
]


def _to_float(coeffs):
    return np.array([float(c) for c in coeffs])


@lru_cache(maxsize=None)
def _canonical(axis: str):
    """Unit-side tables: waypoint pdf, partial-leg, cdf, pdf, E(L)."""
    pieces, breaks = (_X_PIECES, _X_BREAKS) if axis == "x" else (_U_PIECES, _U_BREAKS)
    expected, branches = leg_expectations(pieces, breaks)
    bp = [float(b) for b in breaks]
    partial = PiecewisePolynomial(bp, [_to_float(coefficients(b)) for b in branches])
    cdf = PiecewisePolynomial(
        bp, [_to_float([c / expected for c in coefficients(b)]) for b in branches]
    )
    waypoint = PiecewisePolynomial(
        bp, [_to_float(coefficients(p, S)) for p in pieces]
    )
    return {
        "expected_leg": expected,
        "partial_leg": partial,
        "cdf": cdf,
        "pdf": cdf.derivative(),
        "waypoint_pdf": waypoint,
    }


@dataclass(frozen=True)
class AxisMarginal:
    """Closed-form marginal machinery for one axis at a given side length."""

    axis: str
    side: float
    waypoint_pdf: PiecewisePolynomial
    stationary_pdf: PiecewisePolynomial
    stationary_cdf: PiecewisePolynomial
    partial_leg: PiecewisePolynomial
    expected_leg: float


@lru_cache(maxsize=None)
def axis_marginal(axis: str, side: float) -> AxisMarginal:
    if axis not in ("x", "y"):
        raise ValueError("axis must be 'x' or 'y'")
    if not side > 0:
        raise ValueError("side must be positive")
    tab = _canonical(axis)
    # coordinate scale from the canonical variable to the real one
    alpha = side if axis == "x" else SQRT3 * side
    return AxisMarginal(
        axis=axis,
        side=side,
        waypoint_pdf=tab["waypoint_pdf"].scaled_argument(alpha) * (1.0 / alpha),
        stationary_pdf=tab["pdf"].scaled_argument(alpha) * (1.0 / alpha),
        stationary_cdf=tab["cdf"].scaled_argument(alpha),
        partial_leg=tab["partial_leg"].scaled_argument(alpha) * alpha,
        expected_leg=float(tab["expected_leg"]) * alpha,
    )


def _check(value, lo, hi, what):
    tol = 1e-9 * max(abs(hi), 1.0)
    if not (lo - tol <= value <= hi + tol):
        raise DomainError(f"{what}={value} outside [{lo}, {hi}]")


def waypoint_pdf_x(s: float, a: float) -> float:
    """Density of a leg endpoint's x-coordinate."""
    m = axis_marginal("x", a)
    _check(s, 0.0, 2 * a, "s")
    return m.waypoint_pdf(s)


def waypoint_pdf_y(s: float, a: float) -> float:
    """Density of a leg endpoint's y-coordinate."""
    m = axis_marginal("y", a)
    _check(s, 0.0, SQRT3 * a, "s")
    return m.waypoint_pdf(s)


def expected_leg_x(a: float) -> float:
    """Expected projected leg length along x: 71a/135."""
    return axis_marginal("x", a).expected_leg


def expected_leg_y(a: float) -> float:
    """Expected projected leg length along y: 41a/(45 sqrt(3))."""
    return axis_marginal("y", a).expected_leg


def expected_lx(x: float, a: float) -> float:
    """Expected portion of the projected leg lying below coordinate x."""
    m = axis_marginal("x", a)
    _check(x, 0.0, 2 * a, "x")
    return m.partial_leg(x)


def expected_ly(y: float, a: float) -> float:
    """Expected portion of the projected leg lying below coordinate y."""
    m = axis_marginal("y", a)
    _check(y, 0.0, SQRT3 * a, "y")
    return m.partial_leg(y)


def stationary_cdf_x(x: float, a: float) -> float:
    m = axis_marginal("x", a)
    _check(x, 0.0, 2 * a, "x")
    return m.stationary_cdf(x)


def stationary_cdf_y(y: float, a: float) -> float:
    m = axis_marginal("y", a)
    _check(y, 0.0, SQRT3 * a, "y")
    return m.stationary_cdf(y)


def stationary_pdf_x(x: float, a: float) -> float:
    m = axis_marginal("x", a)
    _check(x, 0.0, 2 * a, "x")
    return m.stationary_pdf(x)


def stationary_pdf_y(y: float, a: float) -> float:
    m = axis_marginal("y", a)
    _check(y, 0.0, SQRT3 * a, "y")
    return m.stationary_pdf(y)


def shifted_pdf_dx(dx, x1: float, a: float):
    """Density of the x-offset from a reference at x1; 0 outside support."""
    return axis_marginal("x", a).stationary_pdf.eval_zero_outside(np.asarray(dx) + x1)


def shifted_pdf_dy(dy, y1: float, a: float):
    """Density of the y-offset from a reference at y1; 0 outside support."""
    return axis_marginal("y", a).stationary_pdf.eval_zero_outside(np.asarray(dy) + y1)
