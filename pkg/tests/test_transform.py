import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from colebrook_omega.approx import METHODS, FlowPoint, get_method, transform, transform_batch
from colebrook_omega.exceptions import DomainError

REF = METHODS["Reference"]

re_in = st.floats(4000, 1e8)
eps_in = st.floats(0, 0.05)


def test_smooth_lower_corner_x():
    # ln(4000) - ln(2 * 2.51 / ln 10), evaluated independently
    expected = math.log(4000) - math.log(5.02 / math.log(10))
    tp = transform(FlowPoint(4000, 0), REF)
    assert tp.a == 0.0
    assert tp.x == pytest.approx(expected, rel=1e-15)
    assert tp.x == pytest.approx(7.5147, abs=1e-4)


def test_upper_corner_x_is_not_619():
    tp = transform(FlowPoint(1e8, 0.05), REF)
    assert tp.x == pytest.approx(6.18e5, rel=1e-3)


def test_engineering_constants_used():
    spec = get_method("Eq29")
    tp = transform(FlowPoint(1e5, 1e-3), spec)
    assert tp.a == 1e5 * 1e-3 / 8.0897
    assert tp.b == math.log(1e5) - 0.779626


@given(re_in, eps_in)
def test_transformed_point_invariants(re, eps):
    tp = transform(FlowPoint(re, eps), REF)
    assert tp.x == tp.a + tp.b
    assert tp.c == math.log(tp.x)
    assert tp.x >= 7.51


def test_nonsensical_re_raises_domain_error():
    with pytest.raises(DomainError):
        transform(FlowPoint(1.0, 0.0), REF)
    with pytest.raises(DomainError):
        transform(FlowPoint(0.0, 0.0), REF)


def test_batch_matches_scalar():
    re = np.array([4000.0, 1e5, 1e8])
    eps = np.array([0.0, 1e-4, 0.05])
    tb = transform_batch(re, eps, REF)
    for i in range(3):
        ts = transform(FlowPoint(re[i], eps[i]), REF)
        assert tuple(float(f[i]) for f in tb) == pytest.approx(tuple(ts), rel=1e-15)


def test_batch_domain_error():
    with pytest.raises(DomainError):
        transform_batch([1e5, 1.0], [0.0, 0.0], REF)


def test_flow_point_domain_flag():
    assert FlowPoint(4000, 0).in_domain
    assert FlowPoint(1e8, 0.05).in_domain
    assert not FlowPoint(3999, 0).in_domain
    assert not FlowPoint(1e5, 0.06).in_domain
