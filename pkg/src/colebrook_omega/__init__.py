"""Colebrook flow friction via explicit Wright-omega approximations."""

from .approx import (
    DEFAULT_METHOD,
    METHODS,
    FlowPoint,
    FrictionResult,
    MethodSpec,
    evaluate,
    evaluate_batch,
    get_method,
)
from .estimators import ColebrookFriction, WrightTransformer
from .reference import cross_check, solve_reference, wright_omega

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_METHOD",
    "METHODS",
    "ColebrookFriction",
    "FlowPoint",
    "FrictionResult",
    "MethodSpec",
    "WrightTransformer",
    "cross_check",
    "evaluate",
    "evaluate_batch",
    "get_method",
    "solve_reference",
    "wright_omega",
]
