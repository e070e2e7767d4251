"""Acceptance suite: one test group per numbered criterion, tolerances as pinned.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the summary, which prints one PASS/FAIL line per criterion.
"""

import math
import time

import numpy as np
import pytest

from kerrqle.energy import FAMILIES, brown_york_mass, critical_value, minimality_probe
from kerrqle.kerr_metric import KerrParams, metric_at, metric_derivs_at, omega012_at
from kerrqle.mass_relations import a_from_mir
from kerrqle.quadrature import integrate_uniform, theta_grid
from kerrqle.regions import SQRT3, r_h, r_k, r_plus
from kerrqle.surface_geometry import (
    L_function,
    SurfaceSpec,
    embedding_profile,
    gaussian_curvature,
    mean_curvature_difference,
)

DTHETA = 1e-3
A_CRIT = SQRT3 / 2


def criterion(number, title):
    return pytest.mark.acceptance(number, title)


def spec(a, r, m=1.0):
    return SurfaceSpec(KerrParams(m, a), r)


def energy(a, r, m=1.0):
    return critical_value(spec(a, r, m), DTHETA)


# 1 --------------------------------------------------------------------------------


@criterion(1, "r_k reproduction: r_k(1, 1) = 1.63437 +- 1e-4, cubic residual <= 1e-12")
def test_c01_rk_value():
    assert abs(r_k(KerrParams(1.0, 1.0)) - 1.63437) <= 1e-4


@criterion(1, "r_k reproduction: r_k(1, 1) = 1.63437 +- 1e-4, cubic residual <= 1e-12")
def test_c01_rk_residual_and_runtime():
    start = time.perf_counter()
    worst = 0.0
    for a in np.linspace(0.0, 1.0, 1000):
        rk = r_k(KerrParams(1.0, a))
        worst = max(worst, abs(rk**3 + a * a * rk - 6 * a * a))
    elapsed = time.perf_counter() - start
    assert worst <= 1e-12
    assert elapsed / 1000 < 1e-3  # milliseconds per evaluation at most


# 2 --------------------------------------------------------------------------------


@criterion(2, "triple intersection of r_+, r_k, sqrt(3) a at (sqrt(3)/2, 3/2), 1e-12")
def test_c02_triple_intersection():
    p = KerrParams(1.0, A_CRIT)
    for value in (r_plus(p), r_k(p), SQRT3 * p.a):
        assert abs(value - 1.5) <= 1e-12


# 3 --------------------------------------------------------------------------------


@criterion(3, "Schwarzschild energy r(1 - sqrt(1 - 2/r)) to 1e-6, E(r=2) = 2 +- 1e-3, < 1 s/point")
@pytest.mark.parametrize("r", [2.5, 3.0, 5.0, 10.0])
def test_c03_schwarzschild_closed_form(r):
    start = time.perf_counter()
    E = energy(0.0, r).value
    assert time.perf_counter() - start < 1.0
    assert abs(E - r * (1 - math.sqrt(1 - 2 / r))) <= 1e-6


@criterion(3, "Schwarzschild energy r(1 - sqrt(1 - 2/r)) to 1e-6, E(r=2) = 2 +- 1e-3, < 1 s/point")
def test_c03_horizon_value():
    start = time.perf_counter()
    E = energy(0.0, 2.0).value
    assert time.perf_counter() - start < 1.0
    assert abs(E - 2.0) <= 1e-3


# 4 --------------------------------------------------------------------------------


@criterion(4, "sign theorem on a 50x50 (a, r) grid, 2000-point theta scan, zero violations, < 1 min")
def test_c04_sign_theorem():
    start = time.perf_counter()
    theta = np.linspace(0.0, math.pi, 2000)
    violations = []
    for a in np.linspace(0.0, 1.0, 50):
        p = KerrParams(1.0, a)
        rk = r_k(p)
        for r in r_plus(p) + np.linspace(1e-3, 3.0, 50):
            s = SurfaceSpec(p, r)
            K_pos = gaussian_curvature(s, theta).min() > 0
            if K_pos != (r > rk):
                violations.append(("K", a, r))
            if K_pos:
                diff_pos = mean_curvature_difference(s, theta).min() > 0
                if diff_pos != (r > SQRT3 * a):
                    violations.append(("k0-k", a, r))
    assert violations == []
    assert time.perf_counter() - start < 60


# 5 --------------------------------------------------------------------------------


@criterion(5, "two-route Brown-York equality on a 10x10 grid within 2x combined error estimates")
def test_c05_two_routes():
    failures = []
    for a in np.linspace(0.0, 1.0, 10):
        p = KerrParams(1.0, a)
        floor = max(r_plus(p), r_k(p))
        for r in floor + np.geomspace(1e-2, 8.0, 10):
            s = SurfaceSpec(p, r)
            e1 = critical_value(s, DTHETA)
            e2 = brown_york_mass(s, DTHETA)
            if abs(e1.value - e2.value) > 2 * (e1.error_estimate + e2.error_estimate):
                failures.append((a, r, e1.value, e2.value))
    assert failures == []


# 6 --------------------------------------------------------------------------------

C6 = "figure monotonicity in r, a and M_ir, and positivity on the triangle-like region"


@criterion(6, C6)
@pytest.mark.parametrize("a", [0.0, 0.2, 0.4, 0.6, 0.8, 1.0])
def test_c06_decreasing_in_r(a):
    p = KerrParams(1.0, a)
    lo = max(2.0, r_k(p) + 0.01)
    r_grid = np.arange(lo, 10.0 + 1e-9, 0.1)
    E = np.array([energy(a, r).value for r in r_grid])
    assert np.all(np.diff(E) < 0)


@criterion(6, C6)
@pytest.mark.parametrize("r", [2.0, 3.0, 5.0])
def test_c06_decreasing_in_a(r):
    E = np.array([energy(a, r).value for a in np.linspace(0.0, 1.0, 21)])
    assert np.all(np.diff(E) < 0)


@criterion(6, C6)
@pytest.mark.parametrize("r", [2.0, 3.0, 5.0])
def test_c06_increasing_in_mir(r):
    mirs = np.linspace(1 / math.sqrt(2), 1.0, 21)
    E = np.array([energy(a_from_mir(1.0, mir), r).value for mir in mirs])
    assert np.all(np.diff(E) > 0)


@criterion(6, C6)
def test_c06_triangle_region_positive():
    rng = np.random.default_rng(2024)
    count = 0
    while count < 20:
        a = rng.uniform(A_CRIT, 1.0)
        p = KerrParams(1.0, a)
        lo, hi = r_k(p), SQRT3 * a
        if hi - lo < 1e-6:
            continue
        r = rng.uniform(lo, hi)
        if not lo < r < hi:
            continue
        assert energy(a, r).value > 0, (a, r)
        count += 1


# 7 --------------------------------------------------------------------------------


@criterion(7, "ADM limit |E(a, 100) - 1| <= 0.02")
@pytest.mark.parametrize("a", [0.0, 0.5, 1.0])
def test_c07_adm_limit(a):
    assert abs(energy(a, 100.0).value - 1.0) <= 0.02


# 8 --------------------------------------------------------------------------------


@criterion(8, "minimality probe: delta_E >= -2 error_estimate and nonnegative eps^2 coefficient")
@pytest.mark.parametrize("a,r", [(0.3, 3.0), (0.5, 2.0), (0.9, 1.7)])
@pytest.mark.parametrize("family", sorted(FAMILIES))
def test_c08_minimality(a, r, family):
    s = spec(a, r)
    assert r > r_h(s.params)
    report = minimality_probe(s, family, np.linspace(0.0, 0.3, 13), DTHETA)
    rows = report.admissible_rows()
    assert len(rows) == 13
    for row in rows:
        assert row.delta_E >= -2 * row.error_estimate, row
    assert report.quadratic_coefficient() >= 0


# 9 --------------------------------------------------------------------------------

C9 = "geometry invariants: Gauss-Bonnet, L_sigma = H_sigma K, embedding round-trip, omega^0_12"
GEOMETRY_SAMPLES = [(0.0, 2.0), (0.3, 2.5), (0.5, 1.9), (A_CRIT, 1.6), (0.9, 1.6),
                    (0.95, 1.7), (1.0, 1.7), (1.0, 3.0), (0.7, 6.0), (0.2, 20.0)]


@criterion(9, C9)
@pytest.mark.parametrize("a,r", GEOMETRY_SAMPLES)
def test_c09_gauss_bonnet(a, r):
    s = spec(a, r)
    th = theta_grid(DTHETA)
    f = metric_at(s.params, r, th)
    total, _ = integrate_uniform(gaussian_curvature(s, th) * np.sqrt(f.H * f.Sigma2), th[1] - th[0])
    assert abs(total - 2.0) <= 1e-5


@criterion(9, C9)
@pytest.mark.parametrize("a,r", GEOMETRY_SAMPLES)
def test_c09_L_sigma(a, r):
    s = spec(a, r)
    h = 1e-6
    for sig in np.linspace(0.05, 0.95, 10):
        th, th_p, th_m = (math.asin(math.sqrt(v)) for v in (sig, sig + h, sig - h))
        L_sig = (float(L_function(s, th_p)) - float(L_function(s, th_m))) / (2 * h)
        expect = float(metric_derivs_at(s.params, r, th).H_sigma) * float(gaussian_curvature(s, th))
        assert abs(L_sig - expect) <= 1e-6 * abs(expect)


@criterion(9, C9)
@pytest.mark.parametrize("a,r", GEOMETRY_SAMPLES)
def test_c09_embedding_round_trip(a, r):
    s = spec(a, r)
    th = theta_grid(DTHETA)
    prof = embedding_profile(s, th)
    g_phiphi, g_thth = prof.first_fundamental_form()
    f = metric_at(s.params, r, th)
    assert np.max(np.abs(g_phiphi - f.H)) <= 1e-8
    assert np.max(np.abs(g_thth - f.Sigma2)) <= 1e-8


@criterion(9, C9)
@pytest.mark.parametrize("a", [0.0, 0.5, 0.9, 1.0])
def test_c09_omega012(a):
    p = KerrParams(1.0, a)
    worst = 0.0
    for r in np.linspace(r_plus(p) + 0.05, 10.0, 20):
        for th in np.linspace(0.05, math.pi - 0.05, 20):
            worst = max(worst, abs(omega012_at(p, r, th)))
    assert worst <= 1e-8


# 10 -------------------------------------------------------------------------------


@criterion(10, "mass scaling E(2, a, r) = 2 E(1, a/2, r/2) within 2x error estimates")
@pytest.mark.parametrize("a,r", [(0.0, 5.0), (0.6, 4.0), (1.2, 3.8), (1.9, 3.5), (2.0, 8.0)])
def test_c10_scaling(a, r):
    big = energy(a, r, m=2.0)
    unit = energy(a / 2, r / 2, m=1.0)
    assert abs(big.value - 2 * unit.value) <= 2 * (big.error_estimate + 2 * unit.error_estimate)


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
