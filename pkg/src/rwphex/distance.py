"""Analytic CDF of the node-to-reference distance.

The CDF is a ratio of integrals of the product density f_dX * f_dY over
(hexagon intersect disk) and over the hexagon.  Because the hexagon is
convex, each vertical slice of the integration region is an interval, so
the inner integral over the y-offset is the exact difference of the
stationary y-CDF at the interval ends.  Only a 1D adaptive quadrature over
the x-offset remains; its integrand is piecewise smooth with kinks where
the disk meets hexagon edges or marginal breakpoints, and those abscissae
are inserted as initial subdivision points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .hexgeom import SQRT3, HexRegion, RefNode
from .marginals import axis_marginal

__all__ = [
    "QuadratureSpec",
    "QuadratureError",
    "CdfCurve",
    "product_mass_hexagon",
    "distance_cdf",
    "distance_cdf_curve",
]


@dataclass(frozen=True)
class QuadratureSpec:
    abs_tol: float = 1e-6
    max_subdivisions: int = 20
    rule: str = "gauss15"

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise ValueError("abs_tol must be positive")
        if self.max_subdivisions < 4:
            raise ValueError("max_subdivisions must be at least 4")
        if self.rule != "gauss15":
            raise ValueError(f"unknown quadrature rule {self.rule!r}")


class QuadratureError(ArithmeticError):
    """Adaptive quadrature failed to reach tolerance; carries the estimate."""

    def __init__(self, message: str, estimate: float):
        super().__init__(message)
        self.estimate = estimate


@dataclass(frozen=True)
class CdfCurve:
    d_values: np.ndarray
    cdf_values: np.ndarray
    ref: RefNode
    side: float


@lru_cache(maxsize=1)
def _gauss15():
    return np.polynomial.legendre.leggauss(15)


def _adaptive_quad(f, lo: float, hi: float, cuts, spec: QuadratureSpec) -> float:
    """Integrate a vectorized f over [lo, hi] to spec.abs_tol."""
    if hi <= lo:
        return 0.0
    nodes, weights = _gauss15()

    def gl(a, b):
        half = 0.5 * (b - a)
        return half * float(weights @ f(0.5 * (a + b) + half * nodes))

    pts = [lo] + sorted(c for c in cuts if lo < c < hi) + [hi]
    total_width = hi - lo
    stack = [(pts[i], pts[i + 1], gl(pts[i], pts[i + 1]), 0) for i in range(len(pts) - 1)]
    acc = 0.0
    err_left = 0.0
    while stack:
        a, b, whole, depth = stack.pop()
        mid = 0.5 * (a + b)
        s1, s2 = gl(a, mid), gl(mid, b)
        err = abs(s1 + s2 - whole)
        if err <= spec.abs_tol * (b - a) / total_width or (b - a) < 1e-14 * total_width:
            acc += s1 + s2
        elif depth >= spec.max_subdivisions:
            acc += s1 + s2
            err_left += err
        else:
            stack.append((a, mid, s1, depth + 1))
            stack.append((mid, b, s2, depth + 1))
    if err_left > spec.abs_tol:
        raise QuadratureError(
            f"quadrature did not converge (residual error {err_left:.3e})", acc
        )
    return acc


def _slice_bounds(x, a):
    """y-range of the hexagon's vertical slice at coordinate x."""
    ylo = SQRT3 * np.maximum(0.0, np.maximum(a / 2 - x, x - 3 * a / 2))
    return ylo, SQRT3 * a - ylo


def _circle_edge_cuts(ref: RefNode, region: HexRegion, d: float):
    """x-offsets where the radius-d circle around ref crosses hexagon edges."""
    x1, y1 = ref.pos
    cuts = []
    verts = region.vertices()
    for i in range(6):
        px, py = verts[i]
        qx, qy = verts[(i + 1) % 6]
        vx, vy = qx - px, qy - py
        wx, wy = px - x1, py - y1
        A = vx * vx + vy * vy
        B = 2 * (vx * wx + vy * wy)
        C = wx * wx + wy * wy - d * d
        disc = B * B - 4 * A * C
        if disc < 0:
            continue
        r = math.sqrt(disc)
        for t in ((-B - r) / (2 * A), (-B + r) / (2 * A)):
            if 0.0 <= t <= 1.0:
                cuts.append(px + t * vx - x1)
    return cuts


def _mass(ref: RefNode, a: float, d, spec: QuadratureSpec) -> float:
    """Product-density mass on the hexagon, optionally cut by a radius-d disk.

    Works in offset coordinates (dx, dy) = (x - x1, y - y1) so that the disk
    is centered at the origin, exactly as the CDF definition requires.
    """
    x1, y1 = ref.pos
    mx = axis_marginal("x", a)
    my = axis_marginal("y", a)
    f_x = mx.stationary_pdf
    F_y = my.stationary_cdf
    height = SQRT3 * a

    lo = -x1
    hi = 2 * a - x1
    cuts = [c - x1 for c in (a / 2, 3 * a / 2)]
    if d is not None:
        lo = max(lo, -d)
        hi = min(hi, d)
        cuts.extend((-d, d))
        for yc in (0.0, height / 2, height):
            t = yc - y1
            if abs(t) < d:
                r = math.sqrt(d * d - t * t)
                cuts.extend((-r, r))
        cuts.extend(_circle_edge_cuts(ref, HexRegion(a), d))
    if hi <= lo:
        return 0.0

    def integrand(dx):
        x = np.clip(dx + x1, 0.0, 2 * a)
        ylo, yhi = _slice_bounds(x, a)
        if d is not None:
            c = np.sqrt(np.maximum(d * d - dx * dx, 0.0))
            ylo = np.maximum(ylo, y1 - c)
            yhi = np.minimum(yhi, y1 + c)
        w = F_y(np.clip(yhi, 0.0, height)) - F_y(np.clip(ylo, 0.0, height))
        return f_x(x) * np.where(yhi > ylo, w, 0.0)

    return _adaptive_quad(integrand, lo, hi, cuts, spec)


def product_mass_hexagon(ref: RefNode, a: float, spec: QuadratureSpec = QuadratureSpec()) -> float:
    """Mass of f_dX * f_dY on the hexagon; independent of ref up to quadrature."""
    if not a > 0:
        raise ValueError("side must be positive")
    return _mass(ref, a, None, spec)


def distance_cdf(ref: RefNode, a: float, d: float,
                 spec: QuadratureSpec = QuadratureSpec()) -> float:
    """P(distance to ref < d) for the stationary mobile node."""
    if not a > 0:
        raise ValueError("side must be positive")
    if d < 0:
        raise ValueError("d must be nonnegative")
    denom = _mass(ref, a, None, spec)
    return _ratio(_mass(ref, a, d, spec), denom, spec)


def _ratio(num: float, denom: float, spec: QuadratureSpec) -> float:
    value = num / denom
    if value < -spec.abs_tol or value > 1 + spec.abs_tol:
        raise QuadratureError(f"CDF estimate {value} escapes [0, 1]", value)
    return min(1.0, max(0.0, value))


def distance_cdf_curve(ref: RefNode, a: float, n_points: int,
                       spec: QuadratureSpec = QuadratureSpec()) -> CdfCurve:
    """CDF sampled on a uniform grid spanning [d_min, d_max]."""
    if n_points < 2:
        raise ValueError("n_points must be at least 2")
    region = HexRegion(a)
    d_min, d_max = region.distance_extremes(ref)
    denom = _mass(ref, a, None, spec)
    grid = np.linspace(d_min, d_max, n_points)
    values = np.array([_ratio(_mass(ref, a, d, spec), denom, spec) for d in grid])
    return CdfCurve(d_values=grid, cdf_values=values, ref=ref, side=a)
