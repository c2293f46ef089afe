"""Piecewise polynomials over contiguous intervals.

Intervals are closed on the left and open on the right, except the last
interval which is closed; evaluation at an interior breakpoint therefore
uses the piece that starts there.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly

__all__ = ["PiecewisePolynomial", "DomainError"]


class DomainError(ValueError):
    """Argument outside the domain of a piecewise polynomial."""


class PiecewisePolynomial:
    """Polynomial pieces over ``breakpoints[i] <= t < breakpoints[i+1]``.

    ``coeffs[i]`` holds ascending-power coefficients of the i-th piece.
    """

    __slots__ = ("breakpoints", "coeffs")

    def __init__(self, breakpoints, coeffs):
        bp = np.asarray(breakpoints, dtype=float)
        if bp.ndim != 1 or bp.size < 2:
            raise ValueError("need at least two breakpoints")
        if not np.all(np.diff(bp) > 0):
            raise ValueError("breakpoints must be strictly ascending")
        if len(coeffs) != bp.size - 1:
            raise ValueError("piece count must match interval count")
        self.breakpoints = bp
        self.coeffs = [np.atleast_1d(np.asarray(c, dtype=float)) for c in coeffs]

    @property
    def domain(self):
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    def _tol(self):
        lo, hi = self.domain
        return 1e-9 * max(abs(lo), abs(hi), 1.0)

    def piece_index(self, t):
        idx = np.searchsorted(self.breakpoints, t, side="right") - 1
        return np.clip(idx, 0, len(self.coeffs) - 1)

    def __call__(self, t):
        tt = np.asarray(t, dtype=float)
        scalar = tt.ndim == 0
        tt = np.atleast_1d(tt)
        lo, hi = self.domain
        tol = self._tol()
        if np.any(tt < lo - tol) or np.any(tt > hi + tol):
            raise DomainError(f"argument outside domain [{lo}, {hi}]")
        tt = np.clip(tt, lo, hi)
        out = np.empty_like(tt)
        idx = self.piece_index(tt)
        for i, c in enumerate(self.coeffs):
            mask = idx == i
            if mask.any():
                out[mask] = npoly.polyval(tt[mask], c)
        return float(out[0]) if scalar else out

    def eval_zero_outside(self, t):
        """Evaluate, returning 0 wherever t falls outside the domain."""
        tt = np.atleast_1d(np.asarray(t, dtype=float))
        lo, hi = self.domain
        inside = (tt >= lo) & (tt <= hi)
        out = np.zeros_like(tt)
        if inside.any():
            out[inside] = self(tt[inside])
        return float(out[0]) if np.ndim(t) == 0 else out

    def derivative(self) -> "PiecewisePolynomial":
        return PiecewisePolynomial(
            self.breakpoints, [npoly.polyder(c) for c in self.coeffs]
        )

    def antiderivative(self) -> "PiecewisePolynomial":
        """Continuous antiderivative vanishing at the left domain end."""
        pieces = []
        offset = 0.0
        for i, c in enumerate(self.coeffs):
            anti = npoly.polyint(c)
            left = self.breakpoints[i]
            shift = offset - npoly.polyval(left, anti)
            anti = anti.copy()
            anti[0] += shift
            pieces.append(anti)
            offset = npoly.polyval(self.breakpoints[i + 1], anti)
        return PiecewisePolynomial(self.breakpoints, pieces)

    def integrate(self, lo, hi) -> float:
        anti = self.antiderivative()
        return anti(hi) - anti(lo)

    def scaled_argument(self, alpha: float) -> "PiecewisePolynomial":
        """Return q with q(t) = self(t / alpha), for alpha > 0."""
        if alpha <= 0:
            raise ValueError("scale factor must be positive")
        coeffs = [c * alpha ** -np.arange(c.size) for c in self.coeffs]
        return PiecewisePolynomial(self.breakpoints * alpha, coeffs)

    def __mul__(self, scalar):
        s = float(scalar)
        return PiecewisePolynomial(self.breakpoints, [c * s for c in self.coeffs])

    __rmul__ = __mul__
