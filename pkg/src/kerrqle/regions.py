"""Boundary curves in the (a, r) plane and classification of surfaces against them."""

from __future__ import annotations

import csv
import enum
import math
from typing import IO, Iterable

import numpy as np

from .kerr_metric import KerrParams

SQRT3 = math.sqrt(3.0)


class RegionClass(enum.Enum):
    INSIDE_OR_ON_HORIZON = "InsideOrOnHorizon"
    NOT_EMBEDDABLE = "NotEmbeddable"
    TRIANGLE_LIKE = "TriangleLike"
    POSITIVE_EVERYWHERE = "PositiveEverywhere"
    BOUNDARY_CURVE = "BoundaryCurve"


def r_plus(params: KerrParams) -> float:
    return params.m + math.sqrt(params.m**2 - params.a**2)


def ergosphere(params: KerrParams, theta: float) -> float:
    """Static limit m + sqrt(m^2 - a^2 cos^2 theta); informational only."""
    return params.m + math.sqrt(params.m**2 - (params.a * math.cos(theta)) ** 2)


def _cubic(r, a, m):
    return r**3 + a * a * r - 6 * a * a * m


def r_k(params: KerrParams) -> float:
    """Unique real root of r^3 + a^2 r - 6 a^2 m (Cardano, one Newton step)."""
    m, a = params.m, params.a
    if a == 0:
        return 0.0
    if a / m < 1e-8:
        root = (6 * a * a * m) ** (1 / 3)
    else:
        u = np.cbrt(27 * a * a * m + SQRT3 * math.sqrt(243 * a**4 * m * m + a**6))
        root = -a * a / (np.cbrt(3.0) * u) + u / np.cbrt(9.0)
    root = float(root)
    if root == 0.0:  # a^2 m underflowed
        return root
    root -= _cubic(root, a, m) / (3 * root * root + a * a)
    return root


def r_h(params: KerrParams) -> float:
    """Threshold above which k0 - k > 0 on the whole surface (outside the horizon)."""
    if params.a <= SQRT3 * params.m / 2:
        return r_plus(params)
    return SQRT3 * params.a


def classify(params: KerrParams, r: float, tol: float = 1e-9) -> RegionClass:
    """Place (a, r) relative to r_plus, r_k and sqrt(3) a.

    Points within ``tol`` of a curve that lies on or outside the horizon are
    reported as BOUNDARY_CURVE.
    """
    rp = r_plus(params)
    rk = r_k(params)
    r3 = SQRT3 * params.a
    if abs(r - rp) <= tol:
        return RegionClass.BOUNDARY_CURVE
    if r < rp:
        return RegionClass.INSIDE_OR_ON_HORIZON
    if abs(r - rk) <= tol or abs(r - r3) <= tol:
        return RegionClass.BOUNDARY_CURVE
    if r < rk:
        return RegionClass.NOT_EMBEDDABLE
    if r < r3:
        return RegionClass.TRIANGLE_LIKE
    return RegionClass.POSITIVE_EVERYWHERE


def in_triangle_region(params: KerrParams, r: float) -> bool:
    a, m = params.a, params.m
    return SQRT3 * m / 2 <= a <= m and r_k(params) < r < SQRT3 * a


def figure1_scan(a_grid: Iterable[float], m: float = 1.0) -> list[tuple[float, float, float, float]]:
    """Rows (a, r_plus, r_k, sqrt(3) a) over the supplied spins."""
    rows = []
    for a in a_grid:
        p = KerrParams(m, float(a))
        rows.append((p.a, r_plus(p), r_k(p), SQRT3 * p.a))
    return rows


FIGURE1_HEADER = ("a", "r_plus", "r_k", "sqrt3a")


def fmt(x) -> str:
    return "" if x is None else format(float(x), ".17g")


def write_figure1_csv(rows, out: IO[str], classes=None) -> None:
    w = csv.writer(out, lineterminator="\n")
    header = list(FIGURE1_HEADER) + (["class"] if classes is not None else [])
    w.writerow(header)
    for i, row in enumerate(rows):
        cells = [fmt(v) for v in row]
        if classes is not None:
            cells.append(classes[i].value)
        w.writerow(cells)
