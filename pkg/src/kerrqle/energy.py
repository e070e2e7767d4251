"""Quasi-local energy of constant-(t, r) surfaces as a functional of the gauge (x, y).

x = T_r and y = T_theta are the two matching degrees of freedom left after
isometric matching into Minkowski space.  The energy is

    E(x, y) = 1/4 * int_0^pi B(x, y) dtheta

and x = y = 0 is a critical point whose value is the Brown-York mass.

Internally every quantity is in m = 1 units.  ``y`` carries a length and
``x`` is dimensionless, so for general m the gauge is rescaled by y -> y/m.
The integrand is expanded in s = sin(theta) so that every term is
individually O(s) on the axis; B is set to zero at theta = 0, pi.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from .errors import DomainError, HorizonError, InadmissibleGaugeError
from .quadrature import integrate_uniform, is_uniform, theta_grid
from .regions import r_h
from .surface_geometry import (
    SurfaceSpec,
    _Parts,
    _require_embeddable,
    embedded_mean_curvature_k0,
    mean_curvature_k,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaugeFunctions:
    """Samples of x(theta), y(theta) on a grid covering [0, pi].

    Derivatives default to second-order finite differences on the grid.
    """

    theta: np.ndarray
    x: np.ndarray
    y: np.ndarray
    x_theta: np.ndarray | None = None
    y_theta: np.ndarray | None = None

    def __post_init__(self):
        th = np.asarray(self.theta, dtype=float)
        if th.ndim != 1 or th.size < 5 or np.any(np.diff(th) <= 0):
            raise DomainError("theta grid must be strictly increasing with at least 5 nodes")
        if th[0] != 0.0 or not np.isclose(th[-1], np.pi, rtol=0, atol=1e-14):
            raise DomainError("theta grid must include both poles")
        for name in ("x", "y"):
            if np.shape(getattr(self, name)) != th.shape:
                raise DomainError(f"{name} must have the grid's shape")

    @classmethod
    def zero(cls, theta) -> "GaugeFunctions":
        z = np.zeros_like(np.asarray(theta, dtype=float))
        return cls(theta, z, z, z, z)

    def derivatives(self) -> tuple[np.ndarray, np.ndarray]:
        xt = self.x_theta if self.x_theta is not None else np.gradient(self.x, self.theta, edge_order=2)
        yt = self.y_theta if self.y_theta is not None else np.gradient(self.y, self.theta, edge_order=2)
        return xt, yt


@dataclass(frozen=True)
class QleResult:
    value: float
    grid_spacing: float
    rule: str
    error_estimate: float
    n_intervals: int = 0


@dataclass(frozen=True)
class Auxiliaries:
    alpha: np.ndarray
    beta: np.ndarray
    l: np.ndarray


def _m1_parts(spec: SurfaceSpec, theta) -> _Parts:
    theta = np.asarray(theta, dtype=float)
    return _Parts(spec.a1, spec.r1, np.sin(theta) ** 2)


def _beta_hat_sq(p: _Parts, y):
    """beta^2 / (4 sigma); nonnegative exactly when the deformed metric is admissible."""
    return p.htil2 * y * y + p.sigma * p.P * p.Lred


def auxiliaries(spec: SurfaceSpec, theta, x_val, y_val) -> Auxiliaries:
    """alpha = sqrt(x^2 Sigma^2 + R^2 l), beta = sqrt(4 H l - H_theta^2), l = y^2 + Sigma^2."""
    theta = np.asarray(theta, dtype=float)
    if np.any((theta <= 0) | (theta >= np.pi)):
        raise DomainError("auxiliaries are defined for 0 < theta < pi")
    p = _m1_parts(spec, theta)
    if p.Delta <= 0:
        raise HorizonError("R^2 is infinite on the horizon")
    m = spec.params.m
    y = np.asarray(y_val, dtype=float) / m
    x = np.asarray(x_val, dtype=float)
    l = p.Q + y * y
    alpha = np.sqrt(x * x * p.Q + (p.Q / p.Delta) * l)
    bsq = _beta_hat_sq(p, y)
    if np.any(bsq < 0):
        bad = np.atleast_1d(theta)[np.atleast_1d(bsq < 0)]
        raise InadmissibleGaugeError(f"beta is imaginary at theta={bad[0]:.6g}", theta=float(bad[0]))
    beta = 2 * np.sin(theta) * np.sqrt(bsq)
    return Auxiliaries(alpha * m, beta * m**2, l * m**2)


def _integrand_m1(p: _Parts, theta, x, y, xt, yt):
    s, c = np.sin(theta), np.cos(theta)
    a2, Q, sigma = p.a2, p.Q, p.sigma
    htil = np.sqrt(p.htil2)
    sqD = np.sqrt(p.Delta)
    sqQ = np.sqrt(Q)
    l = Q + y * y
    ahat = np.sqrt(x * x * p.Delta + l)  # alpha / R
    bsq = _beta_hat_sq(p, y)
    if np.any(~(bsq > 0)):
        bad = np.atleast_1d(theta)[np.atleast_1d(~(bsq > 0))]
        raise InadmissibleGaugeError(f"beta is not positive at theta={bad[0]:.6g}", theta=float(bad[0]))
    bhat = np.sqrt(bsq)  # beta / (2 sin theta)
    M = 4 * p.H_ss * (1 - sigma) + 2 * p.J / Q**2 - 4 * p.H_s  # (H_thth - 2 Sigma^2) / sigma
    inv_alpha = sqD / (sqQ * ahat)

    t_radial = -ahat * s * p.P_r * sqD / (2 * htil * Q * sqQ)
    t_hess = -htil * (sigma * M - 2 * y * y) / (2 * bhat)
    t_rtheta = htil * a2 * s * s * c * x * y * inv_alpha / Q
    t_sig_a = -htil * a2 * s * s * c * x * y**3 * inv_alpha / (Q * l)
    t_sig_b = -htil * p.H_s * a2 * s * s * c * c / (l * bhat)
    t_xt = s * htil * y * xt * inv_alpha
    t_yt_a = htil * p.H_s * s * c * y * yt / (l * bhat)
    t_yt_b = -s * htil * x * y * y * yt * inv_alpha / l
    return t_radial + t_hess + t_rtheta + t_sig_a + t_sig_b + t_xt + t_yt_a + t_yt_b


def integrand_B(spec: SurfaceSpec, theta, x_val, y_val, x_theta, y_theta):
    """The energy density B(x, y); zero at the poles."""
    theta = np.asarray(theta, dtype=float)
    m = spec.params.m
    x, xt = np.asarray(x_val, float), np.asarray(x_theta, float)
    y, yt = np.asarray(y_val, float) / m, np.asarray(y_theta, float) / m
    theta, x, y, xt, yt = np.broadcast_arrays(theta, x, y, xt, yt)
    out = np.zeros(theta.shape)
    inner = (theta > 0) & (theta < np.pi)
    if np.any(inner):
        p = _m1_parts(spec, theta[inner])
        out[inner] = _integrand_m1(p, theta[inner], x[inner], y[inner], xt[inner], yt[inner])
    out *= m
    return out if out.ndim else float(out)


def qle(spec: SurfaceSpec, gauge: GaugeFunctions, rule: str = "trapezoid") -> QleResult:
    """E = 1/4 int B dtheta on the gauge's (uniform) grid."""
    theta = np.asarray(gauge.theta, dtype=float)
    if not is_uniform(theta):
        raise DomainError("qle needs a uniform theta grid")
    xt, yt = gauge.derivatives()
    B = integrand_B(spec, theta, gauge.x, gauge.y, xt, yt)
    h = theta[1] - theta[0]
    value, err = integrate_uniform(0.25 * B, h, rule)
    if not np.isfinite(value):
        raise InadmissibleGaugeError("energy integral is not finite")
    return QleResult(value, h, rule, err, theta.size - 1)


def critical_value(spec: SurfaceSpec, dtheta: float = 1e-3, rule: str = "trapezoid") -> QleResult:
    """E(0, 0), the value at the trivial solution of the Euler-Lagrange system."""
    _require_embeddable(spec)
    return qle(spec, GaugeFunctions.zero(theta_grid(dtheta)), rule)


def brown_york_mass(spec: SurfaceSpec, dtheta: float = 1e-3, rule: str = "trapezoid") -> QleResult:
    """(1/8 pi) * integral of (k0 - k) over S, assembled from the curvature formulas."""
    _require_embeddable(spec)
    theta = theta_grid(dtheta)
    p = _m1_parts(spec, theta)
    area_density = np.sqrt(p.H * p.Q) * spec.params.m**2  # sqrt(H) Sigma
    diff = embedded_mean_curvature_k0(spec, theta) - mean_curvature_k(spec, theta)
    h = theta[1] - theta[0]
    value, err = integrate_uniform(0.25 * diff * area_density, h, rule)
    return QleResult(value, h, rule, err, theta.size - 1)


def _y_over_sin(theta, y, yt):
    s = np.sin(theta)
    out = np.empty_like(y)
    inner = (theta > 0) & (theta < np.pi)
    out[inner] = y[inner] / s[inner]
    # y vanishes at the poles, so y / sin(theta) -> +-y_theta there
    out[~inner] = np.where(theta[~inner] < 1, yt[~inner], -yt[~inner])
    return out


def x_from_y(spec: SurfaceSpec, theta, y, y_theta) -> np.ndarray:
    """Solve the first Euler-Lagrange equation algebraically for x given y."""
    theta = np.asarray(theta, dtype=float)
    m = spec.params.m
    y1 = np.asarray(y, dtype=float) / m
    yt1 = np.asarray(y_theta, dtype=float) / m
    p = _m1_parts(spec, theta)
    if not p.Delta > 0 or np.any(p.P_r == 0):
        raise HorizonError("(Sigma^2 H)_r vanishes or R^2 is infinite; x(y) undefined")
    c, s = np.cos(theta), np.sin(theta)
    coeff = p.H_s * c * _y_over_sin(theta, y1, yt1) / p.htil2 + p.a2 * s * c * y1 / p.Q
    return -2 * p.htil2 * p.Q / (p.Delta * p.P_r) * (yt1 + coeff)


def el_rhs(spec: SurfaceSpec, theta, x, y) -> tuple[np.ndarray, np.ndarray]:
    """Right-hand sides (y_theta, x_theta) of the Euler-Lagrange system at 0 < theta < pi."""
    th = np.asarray(theta, dtype=float)
    if np.any((th <= 0) | (th >= np.pi)):
        raise DomainError("the Euler-Lagrange system is evaluated off the axis")
    m = spec.params.m
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float) / m
    p = _m1_parts(spec, th)
    if not p.Delta > 0:
        raise HorizonError("Euler-Lagrange coefficients are singular on the horizon")
    s, c = np.sin(th), np.cos(th)
    l = p.Q + y * y
    bsq = _beta_hat_sq(p, y)
    if np.any(bsq < 0):
        bad = np.atleast_1d(th)[np.atleast_1d(bsq < 0)]
        raise InadmissibleGaugeError("beta is imaginary", theta=float(bad[0]))
    alpha = np.sqrt(p.Q / p.Delta) * np.sqrt(x * x * p.Delta + l)
    beta_over_h = 2 * np.sqrt(bsq) / (s * p.htil2)  # beta / H
    ht_over_h = 2 * p.H_s * c / (s * p.htil2)  # H_theta / H
    sig_t_over_sig = -p.a2 * s * c / p.Q  # Sigma_theta / Sigma, equal to R_theta / R
    rhs_y = -p.Delta * p.P_r / (2 * p.htil2 * p.Q) * x - (ht_over_h / 2 - sig_t_over_sig) * y
    rhs_x = sig_t_over_sig * x + (
        p.P_r / (2 * p.P) - (alpha * beta_over_h + x * y * ht_over_h) / (2 * l)
    ) * y
    return m * rhs_y, rhs_x


def el_residual(spec: SurfaceSpec, gauge: GaugeFunctions) -> tuple[np.ndarray, np.ndarray]:
    """Right-hand side minus left-hand side of both Euler-Lagrange equations, interior nodes."""
    theta = np.asarray(gauge.theta, dtype=float)
    inner = (theta > 0) & (theta < np.pi)
    xt, yt = gauge.derivatives()
    rhs_y, rhs_x = el_rhs(spec, theta[inner], np.asarray(gauge.x)[inner], np.asarray(gauge.y)[inner])
    return rhs_y - yt[inner], rhs_x - xt[inner]


# --- minimality probes -------------------------------------------------------

FAMILIES: dict[str, Callable[[np.ndarray], np.ndarray]] = {
    "sin_cos": lambda th: np.sin(th) * np.cos(th),
    "sin2_sin": lambda th: np.sin(2 * th) * np.sin(th),
}
_FAMILY_DERIVS = {
    "sin_cos": lambda th: np.cos(2 * th),
    "sin2_sin": lambda th: 2 * np.cos(2 * th) * np.sin(th) + np.sin(2 * th) * np.cos(th),
}


def deformed_curvature(spec: SurfaceSpec, theta, y, y_theta):
    """Gaussian curvature of H dphi^2 + (Sigma^2 + y^2) dtheta^2 at interior nodes (m = 1 units)."""
    theta = np.asarray(theta, dtype=float)
    p = _m1_parts(spec, theta)
    s, c = np.sin(theta), np.cos(theta)
    sigma = p.sigma
    H = p.H
    H_t = 2 * p.H_s * s * c
    H_tt = 4 * p.H_ss * sigma * (1 - sigma) + 2 * p.H_s * (1 - 2 * sigma)
    l = p.Q + y * y
    l_t = -2 * p.a2 * s * c + 2 * y * y_theta
    num = H * (4 * l * l + H_t * l_t - 2 * H_tt * l) - l * (4 * H * l - H_t**2)
    return num / (4 * l * l * H * H)


@dataclass(frozen=True)
class ProbeRow:
    eps: float
    delta_E: float
    admissible: bool
    error_estimate: float = float("nan")
    reason: str = ""


@dataclass
class MinimalityReport:
    spec: SurfaceSpec
    family: str
    rows: list[ProbeRow] = field(default_factory=list)
    E0: QleResult | None = None

    def admissible_rows(self) -> list[ProbeRow]:
        return [row for row in self.rows if row.admissible]

    def quadratic_coefficient(self) -> float:
        """Least-squares coefficient of eps^2 in delta_E ~ c2 eps^2 + c3 eps^3 + c4 eps^4."""
        rows = [r for r in self.admissible_rows() if r.eps != 0]
        eps = np.array([r.eps for r in rows])
        d = np.array([r.delta_E for r in rows])
        basis = np.column_stack([eps**2, eps**3, eps**4])
        coef, *_ = np.linalg.lstsq(basis, d, rcond=None)
        return float(coef[0])


def gauge_from_y(spec: SurfaceSpec, theta, y, y_theta=None) -> GaugeFunctions:
    theta = np.asarray(theta, dtype=float)
    y = np.asarray(y, dtype=float)
    yt = np.gradient(y, theta, edge_order=2) if y_theta is None else np.asarray(y_theta, float)
    x = x_from_y(spec, theta, y, yt)
    return GaugeFunctions(theta, x, y, None, yt)


def energy_of_y(spec: SurfaceSpec, theta, y, rule: str = "trapezoid") -> QleResult:
    """E(y) := E(x(y), y) with x taken from the first Euler-Lagrange equation."""
    return qle(spec, gauge_from_y(spec, theta, y), rule)


def minimality_probe(
    spec: SurfaceSpec,
    family: str,
    eps_grid: Iterable[float],
    dtheta: float = 1e-3,
    rule: str = "trapezoid",
    force: bool = False,
) -> MinimalityReport:
    """Tabulate E(y_eps) - E(0) for y_eps = eps * m * family(theta)."""
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}")
    if not spec.r > r_h(spec.params) and not force:
        raise DomainError(
            f"r={spec.r} <= r_h(a)={r_h(spec.params):.6g}: minimality is not guaranteed here"
        )
    theta = theta_grid(dtheta)
    E0 = critical_value(spec, dtheta, rule)
    report = MinimalityReport(spec, family, E0=E0)
    base = FAMILIES[family](theta)
    m = spec.params.m
    inner = (theta > 0) & (theta < np.pi)
    for eps in eps_grid:
        eps = float(eps)
        y = eps * m * base
        K_def = deformed_curvature(spec, theta[inner], y[inner] / m, np.gradient(y / m, theta)[inner])
        if not np.all(K_def > 0):
            bad = theta[inner][np.argmin(K_def)]
            report.rows.append(ProbeRow(eps, float("nan"), False, reason=f"K<=0 at theta={bad:.4g}"))
            log.info("skipping eps=%g: deformed curvature not positive", eps)
            continue
        try:
            E = energy_of_y(spec, theta, y, rule)
        except InadmissibleGaugeError as exc:
            report.rows.append(ProbeRow(eps, float("nan"), False, reason=str(exc)))
            continue
        report.rows.append(ProbeRow(eps, E.value - E0.value, True, E.error_estimate + E0.error_estimate))
    return report
