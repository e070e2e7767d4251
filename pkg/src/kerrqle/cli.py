"""Command-line entry point: ``kerrqle {geometry,regions,qle-scan,minimality}``.

Exit codes: 0 success, 2 domain error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import energy
from .errors import DomainError
from .kerr_metric import KerrParams
from .mass_relations import a_from_mir
from .quadrature import RULES
from .regions import classify, figure1_scan, fmt, r_k, write_figure1_csv
from .surface_geometry import (
    L_function,
    SurfaceSpec,
    embedded_mean_curvature_k0,
    gaussian_curvature,
    mean_curvature_k,
    pole_curvature,
)

EXIT_DOMAIN = 2
EXIT_IO = 3
RK_OFFSET = 1e-6

log = logging.getLogger("kerrqle")


class CliIOError(Exception):
    pass


def parse_grid(text: str, a: float | None = None, m: float = 1.0) -> np.ndarray:
    """Parse ``min:max:step`` (endpoints inclusive) or a single number.

    The token ``rk`` stands for r_k(a) + 1e-6 (times m).
    """

    def value(tok: str) -> float:
        tok = tok.strip()
        if tok == "rk":
            if a is None:
                raise DomainError("'rk' needs a fixed --a")
            return r_k(KerrParams(m, a)) + RK_OFFSET * m
        return float(tok)

    parts = text.split(":")
    if len(parts) == 1:
        return np.array([value(parts[0])])
    if len(parts) != 3:
        raise DomainError(f"grid must be min:max:step, got {text!r}")
    lo, hi, step = (value(p) for p in parts)
    if not step > 0 or hi < lo:
        raise DomainError(f"invalid grid {text!r}")
    n = math.floor((hi - lo) / step + 0.5)
    pts = lo + step * np.arange(n + 1)
    if abs(pts[-1] - hi) <= 0.5 * step:
        pts[-1] = hi
    return pts


@contextlib.contextmanager
def _output(path: str | None):
    if path is None or path == "-":
        yield sys.stdout
        return
    try:
        fh = open(path, "w", encoding="utf-8", newline="")
    except OSError as exc:
        raise CliIOError(str(exc)) from exc
    try:
        yield fh
    except OSError as exc:
        raise CliIOError(str(exc)) from exc
    finally:
        fh.close()


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# --- geometry ----------------------------------------------------------------


def cmd_geometry(args) -> int:
    spec = SurfaceSpec(KerrParams(args.m, args.a), args.r)
    theta = 0.0 if args.pole or args.theta is None else args.theta
    out = sys.stdout
    K = pole_curvature(spec) if theta == 0.0 else float(gaussian_curvature(spec, theta))
    k = float(mean_curvature_k(spec, theta))
    L = float(L_function(spec, theta)) + 0.0  # no signed zero at the poles
    print(f"theta={fmt(theta)}", file=out)
    print(f"K={fmt(K)}", file=out)
    print(f"k={fmt(k)}", file=out)
    print(f"L={fmt(L)}", file=out)
    k0 = float(embedded_mean_curvature_k0(spec, theta))
    print(f"k0={fmt(k0)}", file=out)
    print(f"k0-k={fmt(k0 - k)}", file=out)
    return 0


# --- regions -----------------------------------------------------------------


def cmd_regions(args) -> int:
    a_grid = np.linspace(args.a_min, args.a_max, args.n) * args.m
    rows = figure1_scan(a_grid, args.m)
    classes = None
    if args.r is not None:
        classes = [classify(KerrParams(args.m, row[0]), args.r, args.tol) for row in rows]
    with _output(args.out) as fh:
        write_figure1_csv(rows, fh, classes)
    return 0


# --- qle-scan ----------------------------------------------------------------


@dataclass(frozen=True)
class ScanPoint:
    param: float
    a: float
    r: float


def _scan_points(args) -> list[ScanPoint]:
    m = args.m
    if args.mode == "vs_r":
        if args.a is None or ":" in args.a or args.r is None:
            raise DomainError("--mode vs_r needs a single fixed --a and an --r grid")
        a = float(args.a)
        return [ScanPoint(r, a, r) for r in parse_grid(args.r, a, m)]
    if args.r is None or ":" in args.r:
        raise DomainError(f"--mode {args.mode} needs a single fixed --r")
    r = float(args.r)
    if args.mode == "vs_a":
        if args.a is None:
            raise DomainError("--mode vs_a needs an --a grid")
        return [ScanPoint(a, a, r) for a in parse_grid(args.a)]
    if args.mir is None:
        raise DomainError("--mode vs_mir needs --mir")
    pts = []
    for mir in parse_grid(args.mir):
        try:
            a = a_from_mir(m, mir)
        except DomainError:
            a = float("nan")
        pts.append(ScanPoint(mir, a, r))
    return pts


def _evaluate(point: ScanPoint, m: float, dtheta: float, rule: str):
    try:
        if math.isnan(point.a):
            raise DomainError("M_ir outside [m/sqrt(2), m]")
        spec = SurfaceSpec(KerrParams(m, point.a), point.r)
        res = energy.critical_value(spec, dtheta, rule)
        return point.param, res.value, res.error_estimate, ""
    except DomainError as exc:
        return point.param, None, None, str(exc)


def cmd_qle_scan(args) -> int:
    points = _scan_points(args)
    rows = _map(lambda p: _evaluate(p, args.m, args.dtheta, args.rule), points, args.jobs)
    with _output(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["param", "E", "error_estimate", "skip_reason"])
        for param, E, err, reason in rows:
            w.writerow([fmt(param), fmt(E), fmt(err), reason])
    if all(row[1] is None for row in rows):
        print("every grid point was skipped", file=sys.stderr)
        return EXIT_DOMAIN
    return 0


# --- minimality ----------------------------------------------------------------


def cmd_minimality(args) -> int:
    spec = SurfaceSpec(KerrParams(args.m, args.a), args.r)
    eps = np.linspace(0.0, args.eps_max, args.n)
    try:
        report = energy.minimality_probe(spec, args.family, eps, args.dtheta, args.rule, args.force)
    except DomainError as exc:
        if "r_h" in str(exc):
            raise DomainError(f"{exc}; pass --force to probe exploratively (results unasserted)") from exc
        raise
    with _output(args.out) as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["eps", "delta_E", "admissible"])
        for row in report.rows:
            w.writerow([fmt(row.eps), fmt(row.delta_E) if row.admissible else "", str(row.admissible).lower()])
    if not args.force:
        for row in report.admissible_rows():
            if row.delta_E < -2 * row.error_estimate:
                log.warning("eps=%g: delta_E=%g below -2*error_estimate", row.eps, row.delta_E)
    return 0


# --- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kerrqle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--m", type=float, default=1.0, help="black-hole mass (default 1)")
        p.add_argument("--tol", type=float, default=1e-9, help="boundary tolerance for region tests")
        if out:
            p.add_argument("--out", default=None, help="output path (default stdout)")

    def quad(p):
        p.add_argument("--dtheta", type=float, default=1e-3)
        p.add_argument("--rule", choices=RULES, default="trapezoid")

    g = sub.add_parser("geometry", help="curvatures of S(t, r) at one angle")
    common(g, out=False)
    g.add_argument("--a", type=float, required=True)
    g.add_argument("--r", type=float, required=True)
    g.add_argument("--theta", type=float, default=None)
    g.add_argument("--pole", action="store_true", help="report pole values (default when --theta is absent)")
    g.set_defaults(func=cmd_geometry)

    rg = sub.add_parser("regions", help="boundary curves r_+, r_k, sqrt(3) a as CSV")
    common(rg)
    rg.add_argument("--a-min", type=float, default=0.0)
    rg.add_argument("--a-max", type=float, default=1.0)
    rg.add_argument("--n", type=int, default=101)
    rg.add_argument("--r", type=float, default=None, help="also classify this radius")
    rg.set_defaults(func=cmd_regions)

    q = sub.add_parser("qle-scan", help="critical quasi-local energy along a parameter grid")
    common(q)
    quad(q)
    q.add_argument("--mode", choices=("vs_r", "vs_a", "vs_mir"), required=True)
    q.add_argument("--a", default=None, help="fixed spin (vs_r) or spin grid min:max:step (vs_a)")
    q.add_argument("--r", default=None, help="radius grid (vs_r) or fixed radius")
    q.add_argument("--mir", default=None, help="irreducible-mass grid min:max:step (vs_mir)")
    q.add_argument("--jobs", type=int, default=min(4, os.cpu_count() or 1))
    q.set_defaults(func=cmd_qle_scan)

    mn = sub.add_parser("minimality", help="probe E(y_eps) - E(0) along a perturbation family")
    common(mn)
    quad(mn)
    mn.add_argument("--a", type=float, required=True)
    mn.add_argument("--r", type=float, required=True)
    mn.add_argument("--family", choices=sorted(energy.FAMILIES), default="sin_cos")
    mn.add_argument("--eps-max", type=float, default=0.3)
    mn.add_argument("--n", type=int, default=7)
    mn.add_argument("--force", action="store_true")
    mn.set_defaults(func=cmd_minimality)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliIOError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except DomainError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
