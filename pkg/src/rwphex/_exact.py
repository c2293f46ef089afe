"""Exact integration of the per-axis leg-length expectations.

The stationary marginal of a random-waypoint node along one axis is the
ratio E(L_below(x)) / E(L), where L is the projected leg length per period
and L_below(x) the part of it lying below coordinate x.  Both expectations
are iterated integrals of products of piecewise-linear waypoint densities,
so every branch of the result is a polynomial with rational coefficients.
This module evaluates those integrals symbolically over ``Fraction`` so the
coefficient tables baked into the marginal module are exact, not transcribed.

Polynomials in the three quantities involved (start coordinate s,
destination coordinate d, threshold x) are dicts mapping exponent triples
``(i, j, k)`` for ``s**i * d**j * x**k`` to Fractions.
"""

from __future__ import annotations

from fractions import Fraction

S, D, X = 0, 1, 2

Poly = dict


def const(c) -> Poly:
    c = Fraction(c)
    return {(0, 0, 0): c} if c else {}


def variable(v: int) -> Poly:
    key = [0, 0, 0]
    key[v] = 1
    return {tuple(key): Fraction(1)}


def add(p: Poly, q: Poly) -> Poly:
    out = dict(p)
    for key, c in q.items():
        c = out.get(key, 0) + c
        if c:
            out[key] = c
        elif key in out:
            del out[key]
    return out


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, {k: -c for k, c in q.items()})


def mul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for kp, cp in p.items():
        for kq, cq in q.items():
            key = (kp[0] + kq[0], kp[1] + kq[1], kp[2] + kq[2])
            c = out.get(key, 0) + cp * cq
            if c:
                out[key] = c
            elif key in out:
                del out[key]
    return out


def power(p: Poly, n: int) -> Poly:
    out = const(1)
    for _ in range(n):
        out = mul(out, p)
    return out


def substitute(p: Poly, v: int, q: Poly) -> Poly:
    """Replace variable ``v`` in ``p`` by the polynomial ``q``."""
    out: Poly = {}
    for key, c in p.items():
        base = list(key)
        n = base[v]
        base[v] = 0
        out = add(out, mul({tuple(base): c}, power(q, n)))
    return out


def integrate(p: Poly, v: int, lo: Poly, hi: Poly) -> Poly:
    """Definite integral of ``p`` in variable ``v`` from ``lo`` to ``hi``."""
    anti: Poly = {}
    for key, c in p.items():
        up = list(key)
        up[v] += 1
        anti[tuple(up)] = c / up[v]
    return sub(substitute(anti, v, hi), substitute(anti, v, lo))


def coefficients(p: Poly, v: int = X) -> list[Fraction]:
    """Ascending coefficient list of a univariate polynomial in ``v``."""
    deg = 0
    for key in p:
        for w in (S, D, X):
            if w != v and key[w] != 0:
                raise ValueError(f"polynomial is not univariate in {v}: {key}")
        deg = max(deg, key[v])
    out = [Fraction(0)] * (deg + 1)
    for key, c in p.items():
        out[key[v]] = c
    return out


def leg_expectations(pieces: list[Poly], breaks: list[Fraction]):
    """Expected leg length and the below-threshold branch polynomials.

    ``pieces[i]`` is the waypoint density (a polynomial in s) on the interval
    ``[breaks[i], breaks[i+1])``; start and destination are i.i.d. with that
    density.  Returns ``(expected_leg, branches)`` where ``branches[k]`` is
    the polynomial in x giving E(L_below(x)) for x in the k-th interval.
    Both carry the symmetry factor 2 for restricting to s < d.
    """
    n = len(pieces)
    if len(breaks) != n + 1:
        raise ValueError("breakpoint count must be piece count + 1")
    s, d, x = variable(S), variable(D), variable(X)
    dens_d = [substitute(pc, S, d) for pc in pieces]

    def boxed(i, j):
        # s and d in distinct intervals i < j; whole segment below threshold
        inner = integrate(mul(sub(d, s), dens_d[j]), D, const(breaks[j]), const(breaks[j + 1]))
        return integrate(mul(inner, pieces[i]), S, const(breaks[i]), const(breaks[i + 1]))

    def triangular(i):
        # s < d within one interval
        inner = integrate(mul(sub(d, s), dens_d[i]), D, s, const(breaks[i + 1]))
        return integrate(mul(inner, pieces[i]), S, const(breaks[i]), const(breaks[i + 1]))

    branches = []
    for k in range(n):
        total: Poly = {}
        for i in range(n):
            for j in range(i, n):
                if j < k:
                    term = triangular(i) if i == j else boxed(i, j)
                elif j == k:
                    if i < k:
                        inner = add(
                            integrate(mul(sub(d, s), dens_d[k]), D, const(breaks[k]), x),
                            integrate(mul(sub(x, s), dens_d[k]), D, x, const(breaks[k + 1])),
                        )
                        term = integrate(mul(inner, pieces[i]), S, const(breaks[i]), const(breaks[i + 1]))
                    else:
                        inner = add(
                            integrate(mul(sub(d, s), dens_d[k]), D, s, x),
                            integrate(mul(sub(x, s), dens_d[k]), D, x, const(breaks[k + 1])),
                        )
                        term = integrate(mul(inner, pieces[k]), S, const(breaks[k]), x)
                else:
                    # segment straddles the threshold from below: only the
                    # part up to x counts, and only when s lies below x
                    mass_d = integrate(dens_d[j], D, const(breaks[j]), const(breaks[j + 1]))
                    if i < k:
                        term = mul(mass_d, integrate(mul(sub(x, s), pieces[i]), S,
                                                     const(breaks[i]), const(breaks[i + 1])))
                    elif i == k:
                        term = mul(mass_d, integrate(mul(sub(x, s), pieces[k]), S, const(breaks[k]), x))
                    else:
                        continue
                total = add(total, term)
        branches.append(mul(const(2), total))

    expected = substitute(branches[-1], X, const(breaks[-1]))
    return coefficients(expected, X)[0], branches
