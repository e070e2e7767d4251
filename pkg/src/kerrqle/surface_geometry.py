"""Intrinsic and extrinsic geometry of the constant-(t, r) surfaces of Kerr.

Everything is evaluated in units m = 1 through the rational functions of
sigma = sin^2(theta) and rescaled on return.  With A = a^2 + r^2,

    Sigma^2 = Q(sigma) = A - a^2 sigma,
    H Sigma^2 = sigma P(sigma),  P = A^2 - Delta a^2 sigma,

and L = 1 - H_theta^2 / (4 H Sigma^2) = sigma * Lred(sigma), where Lred is
free of the 0/0 cancellation at the poles.  That factorisation is what lets
K, k, k0 and the embedding profile be evaluated on closed theta-grids.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_trapezoid

from .errors import DomainError, HorizonError, NotEmbeddableError
from .kerr_metric import KerrParams, h_sigma

log = logging.getLogger(__name__)

# Delta is clipped to zero inside this band so that r = r_plus evaluates cleanly
HORIZON_TOL = 1e-12


@dataclass(frozen=True)
class SurfaceSpec:
    """The surface S(t, r) of a Kerr black hole; t is irrelevant by stationarity."""

    params: KerrParams
    r: float

    def __post_init__(self):
        r_plus = self.params.r_plus
        if self.r < r_plus * (1 - HORIZON_TOL):
            raise HorizonError(f"r={self.r} lies inside the outer horizon r+={r_plus}")

    @property
    def a1(self) -> float:
        return self.params.a / self.params.m

    @property
    def r1(self) -> float:
        return self.r / self.params.m


@dataclass
class _Parts:
    """Rational building blocks at (a, r, sigma) in m = 1 units."""

    a: float
    r: float
    sigma: np.ndarray

    def __post_init__(self):
        a, r, sg = self.a, self.r, self.sigma
        a2 = a * a
        self.a2 = a2
        self.A = A = a2 + r * r
        self.Delta = D = max(r * r - 2 * r + a2, 0.0)
        self.Q = Q = A - a2 * sg
        self.P = P = A * A - D * a2 * sg
        self.P_r = 4 * r * A - (2 * r - 2) * a2 * sg
        self.H_s, self.H_ss = h_sigma(1.0, a, r, sg)
        # (H_sigma - Q) / sigma
        self.J = a2 * A * (3 * A - 2 * D) + a2 * a2 * sg * (D - 3 * A) + a2**3 * sg * sg
        # P - (1 - sigma) H_sigma^2 = sigma * P * Lred
        bracket = (
            A * A + (2 * A - D) * a2 - (a2 * a2 + 2 * A * a2) * sg + a2 * a2 * sg * sg
            - (1 - sg) * (2 * self.J / Q + sg * self.J**2 / Q**4)
        )
        self.Lred = bracket / P
        self.htil2 = P / Q  # H / sigma

    @property
    def L(self):
        return self.sigma * self.Lred

    @property
    def H(self):
        return self.sigma * self.htil2

    @property
    def K(self):
        return f_of_sigma(self) / self.P**2


def _parts(spec: SurfaceSpec, theta) -> _Parts:
    theta = np.asarray(theta, dtype=float)
    if np.any((theta < 0) | (theta > np.pi)):
        raise DomainError("theta must lie in [0, pi]")
    return _Parts(spec.a1, spec.r1, np.sin(theta) ** 2)


def _parts_sigma(spec: SurfaceSpec, sigma) -> _Parts:
    sigma = np.asarray(sigma, dtype=float)
    if np.any((sigma < 0) | (sigma > 1)):
        raise DomainError("sigma must lie in [0, 1]")
    return _Parts(spec.a1, spec.r1, sigma)


def f_of_sigma(p: _Parts):
    return p.H_s * (p.A * p.A - p.Delta * p.a2) - 2 * p.H_ss * p.P * (1 - p.sigma)


def gaussian_curvature(spec: SurfaceSpec, theta):
    """Gaussian curvature K = f(sigma) / P(sigma)^2; regular on the axis too."""
    return _parts(spec, theta).K / spec.params.m**2


def pole_curvature(spec: SurfaceSpec) -> float:
    a, r = spec.a1, spec.r1
    k0 = r * (r**3 + a * a * r - 6 * a * a) / (a * a + r * r) ** 3
    return float(k0) / spec.params.m**2


def mean_curvature_k(spec: SurfaceSpec, theta):
    """Mean curvature of S inside the t = const slice; zero on the horizon."""
    p = _parts(spec, theta)
    a2, r, s = p.a2, p.r, p.sigma
    k = (2 * r * p.A - (r - 1) * a2 * s) * np.sqrt(p.Delta) / (p.P * np.sqrt(p.Q))
    return k / spec.params.m


def L_function(spec: SurfaceSpec, theta):
    """L = 1 - H_theta^2 / (4 H Sigma^2), vanishing at both poles."""
    return _parts(spec, theta).L


def _require_embeddable(spec: SurfaceSpec):
    if not pole_curvature(spec) > 0:
        from .regions import r_k

        raise NotEmbeddableError(
            f"not embeddable: r <= r_k(a)={r_k(spec.params):.5f} (a={spec.params.a}, r={spec.r})"
        )


def _k0(spec: SurfaceSpec, p: _Parts):
    if np.any(p.Lred <= 0):
        bad = np.atleast_1d(p.sigma)[np.atleast_1d(p.Lred <= 0)]
        log.warning("L <= 0 witness: a=%g r=%g sigma=%s", spec.params.a, spec.r, bad[:5])
        raise NotEmbeddableError(f"L <= 0 on the surface (a={spec.params.a}, r={spec.r})")
    ratio = p.Q * p.Lred / p.P  # L / H
    return p.K / np.sqrt(ratio) + np.sqrt(ratio)


def embedded_mean_curvature_k0(spec: SurfaceSpec, theta):
    """Mean curvature of the isometric image in R^3, sqrt(H/L) K + sqrt(L/H)."""
    _require_embeddable(spec)
    return _k0(spec, _parts(spec, theta)) / spec.params.m


def mean_curvature_difference(spec: SurfaceSpec, theta):
    """k0 - k, the Brown-York integrand."""
    return embedded_mean_curvature_k0(spec, theta) - mean_curvature_k(spec, theta)


@dataclass(frozen=True)
class ProofFunctions:
    f: np.ndarray
    U: np.ndarray
    g: np.ndarray
    h: np.ndarray
    V: np.ndarray


def proof_functions(spec: SurfaceSpec, sigma) -> ProofFunctions:
    """The auxiliary polynomials whose signs decide curvature and k0 - k positivity.

    Always in m = 1 units.
    """
    p = _parts_sigma(spec, sigma)
    a2, r, s, A, D, Q = p.a2, p.r, p.sigma, p.A, p.Delta, p.Q
    f = f_of_sigma(p)
    U = Q * (3 * A * A + D * a2 - 4 * D * a2 * s) - 6 * a2 * p.P * (1 - s)
    g = (2 * r * A - (r - 1) * a2 * s) ** 2 * D / Q
    h = 4 * f - g
    V = U - D * r**4
    return ProofFunctions(f, U, g, h, V)


@dataclass(frozen=True)
class EmbeddingProfile:
    """Axisymmetric surface (rho cos phi, rho sin phi, Z) in R^3."""

    theta: np.ndarray
    rho: np.ndarray
    Z: np.ndarray
    L: np.ndarray
    rho_theta: np.ndarray
    Z_theta: np.ndarray

    def first_fundamental_form(self):
        """Return (g_phiphi, g_thetatheta) of the profile surface."""
        return self.rho**2, self.rho_theta**2 + self.Z_theta**2

    @property
    def height(self) -> float:
        return float(self.Z[-1] - self.Z[0])


def embedding_profile(spec: SurfaceSpec, theta) -> EmbeddingProfile:
    """Build rho = sqrt(H) and Z = int_0^theta Sigma sqrt(L) by cumulative trapezoid."""
    _require_embeddable(spec)
    theta = np.asarray(theta, dtype=float)
    if theta.ndim != 1 or np.any(np.diff(theta) <= 0):
        raise DomainError("theta grid must be one-dimensional and strictly increasing")
    p = _parts(spec, theta)
    interior = (theta > 0) & (theta < np.pi)
    if np.any(p.Lred[interior] <= 0):
        _k0(spec, p)
    m = spec.params.m
    s, c = np.sin(theta), np.cos(theta)
    htil = np.sqrt(p.htil2)
    rho = s * htil
    rho_theta = p.H_s * c / htil
    Z_theta = np.sqrt(p.Q) * s * np.sqrt(np.maximum(p.Lred, 0.0))
    Z = cumulative_trapezoid(Z_theta, theta, initial=0.0)
    return EmbeddingProfile(theta, m * rho, m * Z, p.L, m * rho_theta, m * Z_theta)
