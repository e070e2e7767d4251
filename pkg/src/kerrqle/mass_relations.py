"""Irreducible mass and horizon area of a Kerr black hole."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .kerr_metric import KerrParams
from .regions import r_plus


@dataclass(frozen=True)
class MassPoint:
    m: float
    a: float
    M_ir: float
    A: float

    @classmethod
    def from_params(cls, params: KerrParams) -> "MassPoint":
        return cls(params.m, params.a, mir_from_a(params), horizon_area(params))


def mir_from_a(params: KerrParams) -> float:
    """Irreducible mass sqrt(m r_plus / 2), the branch in [m/sqrt(2), m]."""
    return math.sqrt(params.m * r_plus(params) / 2)


def a_from_mir(m: float, M_ir: float, rtol: float = 1e-12) -> float:
    lo, hi = m / math.sqrt(2), m
    if not lo * (1 - rtol) <= M_ir <= hi * (1 + rtol):
        raise DomainError(f"M_ir={M_ir} outside [m/sqrt(2), m] for m={m}")
    x = min(max(M_ir, lo), hi)
    return min(2 * x * math.sqrt(max(1 - x * x / (m * m), 0.0)), m)


def horizon_area(params: KerrParams) -> float:
    return 8 * math.pi * params.m * r_plus(params)
