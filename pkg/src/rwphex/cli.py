"""Command-line front end: analytic curves, simulation, and comparison.

Exit codes: 0 success (or comparison pass), 1 comparison failure, 2 usage
or input error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from . import __version__
from .hexgeom import SQRT3, HexRegion, Point2, RefNode
from .distance import QuadratureError, QuadratureSpec, distance_cdf_curve
from .marginals import axis_marginal
from .sim import SimConfig, distances_to, simulate, uniform_node_distances

EXIT_OK = 0
EXIT_COMPARE_FAIL = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def _write_csv(path, header, rows):
    try:
        with open(path, "w", newline="") as fh:
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise SystemExit(f"cannot write {path}: {exc}") from exc


def _write_manifest(out_path, command, params, started):
    lines = [f"command={command}"]
    for key in sorted(params):
        lines.append(f"{key}={params[key]}")
    lines.append(f"version={__version__}")
    lines.append(f"wall_clock_s={time.monotonic() - started:.3f}")
    try:
        with open(str(out_path) + ".manifest", "w", newline="") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise SystemExit(f"cannot write manifest: {exc}") from exc


def cmd_marginals(args) -> int:
    started = time.monotonic()
    if args.grid_n < 2:
        raise ValueError("--grid-n must be at least 2")
    m = axis_marginal(args.axis, args.side)
    hi = 2 * args.side if args.axis == "x" else SQRT3 * args.side
    grid = np.linspace(0.0, hi, args.grid_n)
    rows = [(t, m.stationary_pdf(t), m.stationary_cdf(t)) for t in grid]
    _write_csv(args.out, ("coord", "pdf", "cdf"), rows)
    _write_manifest(args.out, "marginals",
                    {"side": args.side, "axis": args.axis, "grid_n": args.grid_n},
                    started)
    return EXIT_OK


def cmd_distance_cdf(args) -> int:
    started = time.monotonic()
    ref = RefNode(Point2(args.ref_x, args.ref_y))
    spec = QuadratureSpec(abs_tol=args.tol)
    try:
        curve = distance_cdf_curve(ref, args.side, args.grid_n, spec)
    except QuadratureError as exc:
        print(f"error: {exc} (estimate {exc.estimate})", file=sys.stderr)
        return EXIT_NUMERIC
    _write_csv(args.out, ("d", "cdf"), zip(curve.d_values, curve.cdf_values))
    _write_manifest(args.out, "distance-cdf",
                    {"side": args.side, "ref_x": args.ref_x, "ref_y": args.ref_y,
                     "grid_n": args.grid_n, "tol": args.tol},
                    started)
    return EXIT_OK


def _ecdf_rows(samples):
    values, counts = np.unique(np.sort(samples), return_counts=True)
    frac = np.cumsum(counts) / len(samples)
    return zip(values, frac)


def cmd_simulate(args) -> int:
    started = time.monotonic()
    config = SimConfig(side=args.side, v_min=args.v_min, v_max=args.v_max,
                       duration=args.duration, sample_interval=args.dt,
                       seed=args.seed)
    trace = simulate(config)
    dists = distances_to(trace, RefNode(Point2(args.ref_x, args.ref_y)))
    _write_csv(args.out, ("d", "ecdf"), _ecdf_rows(dists))
    _write_manifest(args.out, "simulate",
                    {"side": args.side, "ref_x": args.ref_x, "ref_y": args.ref_y,
                     "v_min": args.v_min, "v_max": args.v_max,
                     "duration": args.duration, "dt": args.dt, "seed": args.seed},
                    started)
    return EXIT_OK


def cmd_baseline(args) -> int:
    started = time.monotonic()
    rng = np.random.default_rng(args.seed)
    dists = uniform_node_distances(HexRegion(args.side),
                                   RefNode(Point2(args.ref_x, args.ref_y)),
                                   args.n, rng)
    _write_csv(args.out, ("d", "ecdf"), _ecdf_rows(dists))
    _write_manifest(args.out, "baseline",
                    {"side": args.side, "ref_x": args.ref_x, "ref_y": args.ref_y,
                     "n": args.n, "seed": args.seed},
                    started)
    return EXIT_OK


def _read_curve(path):
    try:
        with open(path) as fh:
            header = fh.readline().strip().split(",")
            data = np.loadtxt(fh, delimiter=",", ndmin=2)
    except (OSError, ValueError) as exc:
        raise SystemExit(f"cannot parse {path}: {exc}") from exc
    if len(header) != 2 or data.shape[1] != 2 or header[0] != "d":
        raise SystemExit(f"{path}: expected a two-column CSV with a 'd' column")
    d, v = data[:, 0], data[:, 1]
    if np.any(np.diff(d) < 0):
        raise SystemExit(f"{path}: d column must be sorted")
    return d, v


def cmd_compare(args) -> int:
    da, va = _read_curve(args.analytic_csv)
    de, ve = _read_curve(args.empirical_csv)
    lo = max(da[0], de[0])
    hi = min(da[-1], de[-1])
    if hi <= lo:
        raise SystemExit("curves have no overlapping d-range")
    grid = np.unique(np.clip(np.concatenate((da, de)), lo, hi))
    gap = np.abs(np.interp(grid, da, va) - np.interp(grid, de, ve))
    k = int(np.argmax(gap))
    ks = float(gap[k])
    print(f"ks_statistic={_fmt(ks)}")
    print(f"max_gap_at_d={_fmt(grid[k])}")
    print(f"threshold={_fmt(args.threshold)}")
    if ks < args.threshold:
        print("result=pass")
        return EXIT_OK
    print("result=fail")
    return EXIT_COMPARE_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rwphex",
        description="Distance distribution of a random-waypoint node in a "
                    "regular hexagon, analytic and simulated.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("marginals", help="export stationary per-axis PDF/CDF")
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--axis", choices=("x", "y"), required=True)
    p.add_argument("--grid-n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_marginals)

    p = sub.add_parser("distance-cdf", help="export the analytic distance CDF")
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--ref-x", type=float, required=True)
    p.add_argument("--ref-y", type=float, required=True)
    p.add_argument("--grid-n", type=int, default=200)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_distance_cdf)

    p = sub.add_parser("simulate", help="run the RWP simulator, export distance ecdf")
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--ref-x", type=float, required=True)
    p.add_argument("--ref-y", type=float, required=True)
    p.add_argument("--v-min", type=float, default=0.01)
    p.add_argument("--v-max", type=float, default=0.05)
    p.add_argument("--duration", type=float, default=100000.0)
    p.add_argument("--dt", type=float, default=1.0)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("baseline", help="distances to i.i.d. uniform node positions")
    p.add_argument("--side", type=float, default=1.0)
    p.add_argument("--ref-x", type=float, required=True)
    p.add_argument("--ref-y", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_baseline)

    p = sub.add_parser("compare", help="KS comparison of two CDF curves")
    p.add_argument("analytic_csv")
    p.add_argument("empirical_csv")
    p.add_argument("--threshold", type=float, default=0.05)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"error: {exc.code}", file=sys.stderr)
            return EXIT_USAGE
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
