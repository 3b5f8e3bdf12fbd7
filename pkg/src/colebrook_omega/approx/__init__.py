"""Explicit Wright-omega approximations of the Colebrook equation."""

from .evaluate import (
    FrictionResult,
    evaluate,
    evaluate_batch,
    friction_batch,
    inv_sqrt_f_batch,
)
from .methods import DEFAULT_METHOD, METHODS, MethodSpec, get_method, method_ids
from .series import s_term, xi, y_series, y_series_alpha
from .symbolic import xi1, y_sr
from .transform import FlowPoint, TransformedPoint, in_domain, transform, transform_batch

__all__ = [
    "DEFAULT_METHOD",
    "FlowPoint",
    "FrictionResult",
    "METHODS",
    "MethodSpec",
    "TransformedPoint",
    "evaluate",
    "evaluate_batch",
    "friction_batch",
    "get_method",
    "in_domain",
    "inv_sqrt_f_batch",
    "method_ids",
    "s_term",
    "transform",
    "transform_batch",
    "xi",
    "xi1",
    "y_series",
    "y_series_alpha",
    "y_sr",
]
