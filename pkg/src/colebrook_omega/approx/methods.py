"""Registry of friction-factor methods and their constant sets.

Every approximation computes::

    1/sqrt(f) = prefactor * (B + y(x, C))
    A = Re * eps / a_divisor
    B = ln(Re) - b_offset

with its own rounded constants. The constants are kept exactly as the
published forms print them, with one exception documented on ``SR-C``.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass, field
from types import MappingProxyType

from ..exceptions import UnknownMethodError
from . import series, symbolic
from .transform import EXACT_A_DIVISOR, EXACT_B_OFFSET, EXACT_PREFACTOR

# Constant sets (prefactor, a_divisor, b_offset).
_ROUNDED = (0.8686, 8.0878, 0.7794)
_SR_ROUNDED = (0.8686, 8.0884, 0.7794)
_XI_SET = (0.86858896, 8.0884, 0.779397)
_OPT_SET = (0.8685972, 8.0897, 0.779626)
_XI1_SET = (0.868589, 8.088387, 0.7793975)


@dataclass(frozen=True)
class MethodSpec:
    """Identity and constants of one friction-factor method.

    ``kind`` selects the ``y`` formula: ``"series"``, ``"series_alpha"``,
    ``"series_xi"``, ``"sr_a"``, ``"sr_b"``, ``"sr_c"``, ``"sr_xi1"`` or
    ``"reference"``. ``order`` is the number of series terms where it
    applies. ``published_max_pct`` is the published maximal relative error in percent.
    """

    id: str
    family: str
    kind: str
    y_equation: str
    equation: str | None
    prefactor: float
    a_divisor: float
    b_offset: float
    alpha: float = 0.0
    order: int = 0
    coefficients: tuple = field(default=())
    published_max_pct: float = 0.0

    @property
    def label(self) -> str:
        return self.equation or self.y_equation

    @property
    def is_reference(self) -> bool:
        return self.kind == "reference"

    def y(self, x, c):
        """The ``omega(x) - x`` estimate at ``x`` with ``c = ln(x)``."""
        kind = self.kind
        if kind == "series":
            return series.series_sum(x, c, self.order)
        if kind == "series_alpha":
            return series.series_alpha_sum(x, c, self.order)
        if kind == "series_xi":
            return series.series_xi_sum(x, c)
        if kind == "sr_a":
            return symbolic.sr_a(x, c, self.coefficients)
        if kind == "sr_b":
            return symbolic.sr_b(x, c, self.coefficients)
        if kind == "sr_c":
            return symbolic.sr_c(x, c, self.coefficients)
        if kind == "sr_xi1":
            return symbolic.sr_xi1(x, c, self.coefficients)
        raise ValueError(f"method {self.id!r} has no closed-form y")


def _spec(id, family, kind, y_eq, eq, consts, pct, **kw):
    pre, ad, bo = consts
    return MethodSpec(id, family, kind, y_eq, eq, pre, ad, bo, published_max_pct=pct, **kw)


_ALL = (
    _spec(
        "Reference", "exact", "reference", "Eq2", None,
        (EXACT_PREFACTOR, EXACT_A_DIVISOR, EXACT_B_OFFSET), 0.0,
    ),
    _spec("Series1", "asymptotic", "series", "Eq8", "Eq21", _ROUNDED, 0.153, order=1),
    _spec("Series2", "asymptotic", "series", "Eq9", None, _ROUNDED, 0.118, order=2),
    _spec("Series3", "asymptotic", "series", "Eq10", None, _ROUNDED, 0.008, order=3),
    _spec("Series4", "asymptotic", "series", "Eq11", None, _ROUNDED, 0.00249, order=4),
    _spec("Series5", "asymptotic", "series", "Eq12", None, _ROUNDED, 0.00247, order=5),
    _spec(
        "SeriesAlpha1", "asymptotic+constant", "series_alpha", "Eq13", "Eq22",
        _ROUNDED, 0.129, order=1, alpha=series.ALPHA[1],
    ),
    _spec(
        "SeriesAlpha2", "asymptotic+constant", "series_alpha", "Eq14", "Eq23",
        _ROUNDED, 0.0691, order=2, alpha=series.ALPHA[2],
    ),
    _spec(
        "SeriesAlpha3", "asymptotic+constant", "series_alpha", "Eq15", "Eq24",
        _ROUNDED, 0.00527, order=3, alpha=series.ALPHA[3],
    ),
    _spec(
        "SeriesXi", "asymptotic+xi", "series_xi", "Eq16", "Eq25", _XI_SET, 0.000391,
        order=1, coefficients=series.XI_NUM + series.XI_DEN,
    ),
    _spec(
        "SR-A", "symbolic", "sr_a", "Eq17", "Eq26", _SR_ROUNDED, 0.0497,
        coefficients=symbolic.SR_A,
    ),
    _spec(
        "SR-B", "symbolic", "sr_b", "Eq18", "Eq27", _SR_ROUNDED, 0.0105,
        coefficients=symbolic.SR_B,
    ),
    # Printed with A-divisor 8.0884, but only 8.0878 reproduces the
    # published 0.00337 % (8.0884 gives about 0.0048 %).
    _spec(
        "SR-C", "symbolic", "sr_c", "Eq19", "Eq28", _ROUNDED, 0.00337,
        coefficients=symbolic.SR_C,
    ),
    _spec(
        "SR-C-Opt", "symbolic-optimized", "sr_c", "Eq19", "Eq29", _OPT_SET, 0.0012,
        coefficients=symbolic.SR_C_OPT,
    ),
    _spec(
        "SR-Xi1", "symbolic-optimized+xi1", "sr_xi1", "Eq20", "Eq30", _XI1_SET,
        0.000024, coefficients=symbolic.SR_C,
    ),
)

#: Immutable id -> spec mapping, in published table order.
METHODS = MappingProxyType({m.id: m for m in _ALL})

#: The SR-C constants exactly as printed, kept for comparison.
SR_C_AS_PRINTED = MethodSpec(
    "SR-C-printed", "symbolic", "sr_c", "Eq19", "Eq28", *_SR_ROUNDED,
    coefficients=symbolic.SR_C, published_max_pct=0.00337,
)

DEFAULT_METHOD = "SR-C-Opt"


def _norm(name):
    return _re.sub(r"[\s_\-.()]", "", str(name)).lower()


def _build_aliases():
    table = {}
    for m in _ALL:
        for key in (m.id, m.y_equation, m.equation):
            if key is not None:
                table.setdefault(_norm(key), m.id)
    return MappingProxyType(table)


_ALIASES = _build_aliases()


def method_ids():
    return list(METHODS)


def get_method(name) -> MethodSpec:
    """Look up a method by id or equation label, case-insensitively.

    ``"SR-C-Opt"``, ``"sr_c_opt"`` and ``"Eq29"`` all name the same method.
    Passing a :class:`MethodSpec` returns it unchanged.
    """
    if isinstance(name, MethodSpec):
        return name
    try:
        return METHODS[_ALIASES[_norm(name)]]
    except KeyError:
        raise UnknownMethodError(
            f"unknown method {name!r}; available: {', '.join(METHODS)}"
        ) from None
