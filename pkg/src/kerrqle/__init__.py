"""Surface geometry and quasi-local energy of constant-(t, r) surfaces in Kerr spacetime."""

from .errors import (
    AxisError,
    DomainError,
    HorizonError,
    InadmissibleGaugeError,
    NotEmbeddableError,
)
from .kerr_metric import KerrParams, metric_at, metric_derivs_at
from .regions import RegionClass, classify, r_h, r_k, r_plus
from .surface_geometry import SurfaceSpec

__all__ = [
    "AxisError",
    "DomainError",
    "HorizonError",
    "InadmissibleGaugeError",
    "KerrParams",
    "NotEmbeddableError",
    "RegionClass",
    "SurfaceSpec",
    "classify",
    "metric_at",
    "metric_derivs_at",
    "r_h",
    "r_k",
    "r_plus",
]
