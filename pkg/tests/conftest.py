"""Shared oracles for the test suite.

The oracles here deliberately avoid the closed-form branch polynomials in
the package: leg-length expectations are re-done with fixed-order 2D
Gauss-Legendre quadrature from the waypoint densities and min/max segment
logic, and distance-CDF values come from rejection-sampled Monte Carlo.
"""

import math

import numpy as np
import pytest

SQRT3 = math.sqrt(3.0)


# ---------------------------------------------------------------------------
# waypoint densities written out independently (area-ratio marginals)

def waypoint_x(s, a=1.0):
    s = np.asarray(s, dtype=float)
    return np.where(
        s <= a / 2, 4 * s / (3 * a * a),
        np.where(s <= 3 * a / 2, 2 / (3 * a), 4 * (2 * a - s) / (3 * a * a)),
    )


def waypoint_y(s, a=1.0):
    s = np.asarray(s, dtype=float)
    return np.where(
        s <= SQRT3 * a / 2,
        2 * (SQRT3 * a + 2 * s) / (9 * a * a),
        (6 * SQRT3 * a - 4 * s) / (9 * a * a),
    )


X_BREAKS = (0.0, 0.5, 1.5, 2.0)
Y_BREAKS = (0.0, SQRT3 / 2, SQRT3)


# ---------------------------------------------------------------------------
# Gauss-Legendre leg-length oracle

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)


def _gl_rect(f, slo, shi, dlo, dhi):
    """Tensor Gauss-Legendre integral of f(s, d) over a rectangle."""
    hs, hd = 0.5 * (shi - slo), 0.5 * (dhi - dlo)
    s = 0.5 * (slo + shi) + hs * _GL_NODES
    d = 0.5 * (dlo + dhi) + hd * _GL_NODES
    S, D = np.meshgrid(s, d, indexing="ij")
    W = np.outer(_GL_WEIGHTS, _GL_WEIGHTS)
    return hs * hd * float(np.sum(W * f(S, D)))


def _gl_upper_triangle(f, lo, hi):
    """Integral of f(s, d) over lo < s < d < hi via the map d = s + u(hi-s)."""
    hs = 0.5 * (hi - lo)
    s = 0.5 * (lo + hi) + hs * _GL_NODES
    u = 0.5 + 0.5 * _GL_NODES
    S, U = np.meshgrid(s, u, indexing="ij")
    D = S + U * (hi - S)
    jac = hs * 0.5 * (hi - S)
    W = np.outer(_GL_WEIGHTS, _GL_WEIGHTS)
    return float(np.sum(W * jac * f(S, D)))


def leg_below_oracle(x, density, breaks):
    """E of the leg portion below x, for i.i.d. waypoints with ``density``.

    Integrates 2 * l(s, d) * density(s) * density(d) over s < d where
    l(s, d) = max(0, min(d, x) - s) for s < x.  The plane is cut at the
    density breakpoints and at x so every cell integrand is smooth, making
    the fixed-order rule effectively exact.
    """
    cuts = sorted(set(list(breaks) + [float(x)]))
    cuts = [c for c in cuts if breaks[0] <= c <= breaks[-1]]

    def f(S, D):
        below = np.clip(np.minimum(D, x) - S, 0.0, None)
        return 2.0 * below * density(S) * density(D)

    total = 0.0
    for i in range(len(cuts) - 1):
        total += _gl_upper_triangle(f, cuts[i], cuts[i + 1])
        for j in range(i + 1, len(cuts) - 1):
            total += _gl_rect(f, cuts[i], cuts[i + 1], cuts[j], cuts[j + 1])
    return total


def expected_leg_oracle(density, breaks):
    return leg_below_oracle(breaks[-1], density, breaks)


# ---------------------------------------------------------------------------
# Monte Carlo oracle for the distance CDF

def sample_axis(pdf, hi, rng, n, pdf_max):
    """Rejection-sample n points from a bounded density on [0, hi]."""
    out = []
    got = 0
    while got < n:
        m = int(1.3 * (n - got) * hi * pdf_max) + 1000
        t = rng.uniform(0.0, hi, m)
        u = rng.uniform(0.0, pdf_max, m)
        acc = t[u < pdf(t)]
        out.append(acc)
        got += len(acc)
    return np.concatenate(out)[:n]


@pytest.fixture(scope="session")
def product_density_cloud():
    """In-hexagon points drawn from the product of the stationary marginals.

    Returns (xs, ys, n_drawn): accepted coordinates plus the pre-rejection
    draw count, shared across tests that need the Monte Carlo oracle.
    """
    import rwphex as rp
    from rwphex.hexgeom import HexRegion

    rng = np.random.default_rng(2024)
    n = 10_000_000
    mx = rp.axis_marginal("x", 1.0)
    my = rp.axis_marginal("y", 1.0)
    xs = sample_axis(mx.stationary_pdf, 2.0, rng, n, 0.96)
    ys = sample_axis(my.stationary_pdf, SQRT3, rng, n, 0.96)
    keep = HexRegion(1.0).contains_mask(xs, ys)
    return xs[keep], ys[keep], n


def mc_distance_cdf(cloud, ref, d):
    """Fraction of the cloud closer than d to ref, with its standard error."""
    xs, ys, _ = cloud
    dist = np.hypot(xs - ref[0], ys - ref[1])
    p = float((dist < d).mean())
    se = math.sqrt(max(p * (1 - p), 1e-12) / len(xs))
    return p, se
