"""Rational approximations of ``omega(x) - x`` found by symbolic regression.

Each formula takes ``x`` and ``c = ln(x)``; none of them calls a
logarithm itself.
"""

from __future__ import annotations

from ..exceptions import UnsupportedTermError

#: Coefficients per variant, stored as printed.
SR_A = (1.038, 0.332)
SR_B = (1.0119, 2.3849)
SR_C = (0.5564, 1.207)
SR_C_OPT = (0.5588, 1.2079)

XI1_NUM = (3.0636, 18.58)
XI1_DEN = (19.5, 169.9, 1260.0, 18178.0)


def sr_a(x, c, coef=SR_A):
    k, s = coef
    return -c + k * c / (x + s)


def sr_b(x, c, coef=SR_B):
    k, s = coef
    return -c + k * c / x + (c - s) / (x * x)


def sr_c(x, c, coef=SR_C):
    p, q = coef
    return -c + c / (x - p * c + q)


def xi1(x, y_cap):
    """Correction subtracted from the ``sr_c`` estimate ``y_cap``."""
    y2 = y_cap * y_cap
    num = x * y2 + XI1_NUM[0] * x * y_cap + XI1_NUM[1]
    den = (
        XI1_DEN[0] * (y2 * x * x + x * x * x)
        + XI1_DEN[1] * y2
        + XI1_DEN[2] * x
        + XI1_DEN[3]
    )
    return num / den


def sr_xi1(x, c, coef=SR_C):
    y_cap = sr_c(x, c, coef)
    return y_cap - xi1(x, y_cap)


_VARIANTS = {
    "A": (sr_a, SR_A),
    "B": (sr_b, SR_B),
    "C": (sr_c, SR_C),
    "C-Opt": (sr_c, SR_C_OPT),
}


def y_sr(x, c, variant):
    """Evaluate symbolic-regression variant ``"A"``, ``"B"``, ``"C"`` or ``"C-Opt"``."""
    try:
        fn, coef = _VARIANTS[variant]
    except KeyError:
        raise UnsupportedTermError(
            f"unknown variant {variant!r}; expected one of {sorted(_VARIANTS)}"
        ) from None
    return fn(x, c, coef)
