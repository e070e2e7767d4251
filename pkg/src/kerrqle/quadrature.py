"""Composite rules on uniform grids with a grid-halving error estimate."""

from __future__ import annotations

import math

import numpy as np

RULES = ("trapezoid", "simpson")
# I_h - I_2h = (2^p - 1) * error(I_h) for a rule of order p
_RICHARDSON = {"trapezoid": 3.0, "simpson": 15.0}


def theta_grid(dtheta: float = 1e-3) -> np.ndarray:
    """Uniform grid on [0, pi] with spacing at most ``dtheta``.

    The interval count is a multiple of 4 so both rules can be halved.
    """
    if not dtheta > 0:
        raise ValueError("dtheta must be positive")
    n = 4 * math.ceil(math.pi / (4 * dtheta))
    return np.linspace(0.0, math.pi, n + 1)


def _weights(n: int, rule: str) -> np.ndarray:
    w = np.ones(n + 1)
    if rule == "trapezoid":
        w[0] = w[-1] = 0.5
    elif rule == "simpson":
        if n % 2:
            raise ValueError("simpson needs an even number of intervals")
        w[1:-1:2] = 4.0
        w[2:-1:2] = 2.0
        w /= 3.0
    else:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    return w


def integrate_uniform(values: np.ndarray, h: float, rule: str = "trapezoid") -> tuple[float, float]:
    """Return (integral, error estimate) of equally spaced samples."""
    values = np.asarray(values, dtype=float)
    n = values.size - 1
    fine = h * float(_weights(n, rule) @ values)
    need = 4 if rule == "simpson" else 2
    if n % need:
        return fine, float("nan")
    coarse = 2 * h * float(_weights(n // 2, rule) @ values[::2])
    return fine, abs(fine - coarse) / _RICHARDSON[rule]


def is_uniform(theta: np.ndarray, rtol: float = 1e-9) -> bool:
    d = np.diff(theta)
    return bool(np.all(np.abs(d - d.mean()) <= rtol * d.mean()))
