"""Kerr metric in Boyer-Lindquist coordinates.

The line element is written in the stationary axisymmetric form

    g = F dt^2 + 2 G dt dphi + H dphi^2 + R^2 dr^2 + Sigma^2 dtheta^2

with coordinates ordered (t, r, theta, phi) wherever a 4x4 array appears.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AxisError, DomainError, HorizonError

T, R, TH, PH = 0, 1, 2, 3


@dataclass(frozen=True)
class KerrParams:
    """Black-hole mass ``m`` and spin ``a`` in geometric units, 0 <= a <= m."""

    m: float = 1.0
    a: float = 0.0

    def __post_init__(self):
        if not self.m > 0:
            raise DomainError(f"mass must be positive, got m={self.m}")
        if not 0 <= self.a <= self.m:
            raise DomainError(f"spin must satisfy 0 <= a <= m, got a={self.a}, m={self.m}")

    def scaled(self) -> "KerrParams":
        """Same black hole in units where m = 1."""
        return KerrParams(1.0, self.a / self.m)

    @property
    def r_plus(self) -> float:
        return self.m + np.sqrt(self.m**2 - self.a**2)


@dataclass(frozen=True)
class MetricFields:
    F: np.ndarray
    G: np.ndarray
    H: np.ndarray
    R2: np.ndarray
    Sigma2: np.ndarray
    Delta: np.ndarray
    sigma: np.ndarray


@dataclass(frozen=True)
class MetricDerivs:
    F_r: np.ndarray
    F_theta: np.ndarray
    G_r: np.ndarray
    G_theta: np.ndarray
    H_r: np.ndarray
    H_theta: np.ndarray
    R2_r: np.ndarray
    R2_theta: np.ndarray
    Sigma2_r: np.ndarray
    Sigma2_theta: np.ndarray
    H_sigma: np.ndarray
    H_sigmasigma: np.ndarray


@dataclass(frozen=True)
class ZamoFrame:
    """Locally nonrotating frame; vectors are contravariant (t, r, theta, phi) components."""

    beta: float
    omega: float
    e0: np.ndarray
    e1: np.ndarray
    e2: np.ndarray
    e3: np.ndarray

    @property
    def vectors(self) -> np.ndarray:
        return np.array([self.e0, self.e1, self.e2, self.e3])


def _check(params: KerrParams, r, theta):
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(r <= 0):
        raise DomainError("r must be positive")
    if np.any((theta < 0) | (theta > np.pi)):
        raise DomainError("theta must lie in [0, pi]")
    return r, theta


def metric_at(params: KerrParams, r, theta) -> MetricFields:
    """Kerr components at (r, theta); broadcasts over array inputs.

    R2 is infinite on the horizon (Delta = 0).
    """
    r, theta = _check(params, r, theta)
    m, a = params.m, params.a
    s, c = np.sin(theta), np.cos(theta)
    sigma = s * s
    Sigma2 = r * r + a * a * c * c
    Delta = r * r - 2 * m * r + a * a
    F = -(Delta - a * a * sigma) / Sigma2
    G = -2 * m * a * r * sigma / Sigma2
    H = sigma * ((r * r + a * a) ** 2 - Delta * a * a * sigma) / Sigma2
    with np.errstate(divide="ignore"):
        R2 = Sigma2 / Delta
    return MetricFields(F, G, H, R2, Sigma2, Delta, sigma)


def h_sigma(m, a, r, sigma):
    """dH/dsigma and d^2H/dsigma^2 at fixed r, with sigma = sin^2(theta)."""
    A = a * a + r * r
    Delta = r * r - 2 * m * r + a * a
    Q = A - a * a * sigma
    hs = (A**3 - 2 * A * Delta * a * a * sigma + Delta * a**4 * sigma * sigma) / Q**2
    hss = 4 * m * r * A * A * a * a / Q**3
    return hs, hss


def metric_derivs_at(params: KerrParams, r, theta) -> MetricDerivs:
    """Analytic r- and theta-partials of the metric components."""
    r, theta = _check(params, r, theta)
    m, a = params.m, params.a
    a2 = a * a
    s, c = np.sin(theta), np.cos(theta)
    sigma = s * s
    sigma_th = 2 * s * c
    A = r * r + a2
    S2 = r * r + a2 * c * c
    S2_r = 2 * r
    S2_th = -a2 * sigma_th
    D = r * r - 2 * m * r + a2
    D_r = 2 * r - 2 * m
    num_F = D - a2 * sigma
    F_r = -(D_r * S2 - num_F * S2_r) / S2**2
    F_th = -(-a2 * sigma_th * S2 - num_F * S2_th) / S2**2
    G_r = -2 * m * a * sigma * (S2 - r * S2_r) / S2**2
    G_th = -2 * m * a * r * (sigma_th * S2 - sigma * S2_th) / S2**2
    P = A * A - D * a2 * sigma
    P_r = 4 * r * A - D_r * a2 * sigma
    H_r = sigma * (P_r * S2 - P * S2_r) / S2**2
    hs, hss = h_sigma(m, a, r, sigma)
    H_th = hs * sigma_th
    with np.errstate(divide="ignore", invalid="ignore"):
        R2_r = (S2_r * D - S2 * D_r) / D**2
        R2_th = S2_th / D
    return MetricDerivs(F_r, F_th, G_r, G_th, H_r, H_th, R2_r, R2_th, S2_r, S2_th, hs, hss)


def metric_matrix(params: KerrParams, r: float, theta: float) -> np.ndarray:
    f = metric_at(params, r, theta)
    g = np.zeros((4, 4))
    g[T, T] = f.F
    g[T, PH] = g[PH, T] = f.G
    g[PH, PH] = f.H
    g[R, R] = f.R2
    g[TH, TH] = f.Sigma2
    return g


def _metric_matrix_derivs(params, r, theta) -> np.ndarray:
    """dg[k, mu, nu] = d g_{mu nu} / d x^k."""
    d = metric_derivs_at(params, r, theta)
    dg = np.zeros((4, 4, 4))
    for k, (F_, G_, H_, R2_, S2_) in (
        (R, (d.F_r, d.G_r, d.H_r, d.R2_r, d.Sigma2_r)),
        (TH, (d.F_theta, d.G_theta, d.H_theta, d.R2_theta, d.Sigma2_theta)),
    ):
        dg[k, T, T] = F_
        dg[k, T, PH] = dg[k, PH, T] = G_
        dg[k, PH, PH] = H_
        dg[k, R, R] = R2_
        dg[k, TH, TH] = S2_
    return dg


def _require_regular(params, r, theta):
    if not 0 < theta < np.pi:
        raise AxisError(f"theta={theta} lies on the symmetry axis")
    D = r * r - 2 * params.m * r + params.a**2
    if D == 0:
        raise HorizonError(f"r={r} lies on a horizon")


def christoffels_at(params: KerrParams, r: float, theta: float) -> np.ndarray:
    """Christoffel symbols ``gamma[lam, mu, nu]`` of the full Kerr metric."""
    r, theta = float(r), float(theta)
    _check(params, r, theta)
    _require_regular(params, r, theta)
    g = metric_matrix(params, r, theta)
    ginv = np.linalg.inv(g)
    dg = _metric_matrix_derivs(params, r, theta)
    # lowered symbols Gamma_{s mu nu}
    low = 0.5 * (np.einsum("mns->smn", dg) + np.einsum("nms->smn", dg) - dg)
    return np.einsum("ls,smn->lmn", ginv, low)


def zamo_frame_at(params: KerrParams, r: float, theta: float) -> ZamoFrame:
    r, theta = float(r), float(theta)
    _check(params, r, theta)
    f = metric_at(params, r, theta)
    if not f.H > 0:
        raise AxisError(f"theta={theta} lies on the symmetry axis (H = 0)")
    det_tp = f.G**2 - f.F * f.H
    if not det_tp > 0 or not f.Delta > 0:
        raise HorizonError(f"r={r} is not outside the outer horizon")
    beta = np.sqrt(f.H) / np.sqrt(det_tp)
    omega = -f.G / f.H
    e0 = np.array([beta, 0.0, 0.0, beta * omega])
    e1 = np.array([0.0, 1 / np.sqrt(f.R2), 0.0, 0.0])
    e2 = np.array([0.0, 0.0, 1 / np.sqrt(f.Sigma2), 0.0])
    e3 = np.array([0.0, 0.0, 0.0, 1 / np.sqrt(f.H)])
    return ZamoFrame(float(beta), float(omega), e0, e1, e2, e3)


def omega012_at(params: KerrParams, r: float, theta: float) -> float:
    """Connection coefficient <nabla_{e2} e1, e0> in the ZAMO frame."""
    frame = zamo_frame_at(params, r, theta)
    _require_regular(params, float(r), float(theta))
    gam = christoffels_at(params, r, theta)
    g = metric_matrix(params, r, theta)
    d = metric_derivs_at(params, r, theta)
    R2 = g[R, R]
    # e1 = R^{-1} d_r, so only its theta-derivative survives along e2
    de1 = np.zeros((4, 4))
    de1[TH, R] = -0.5 * R2**-1.5 * d.R2_theta
    e1, e2 = frame.e1, frame.e2
    cov = np.einsum("m,ml->l", e2, de1) + np.einsum("m,lmn,n->l", e2, gam, e1)
    return float(cov @ g @ frame.e0)
