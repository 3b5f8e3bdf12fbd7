import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from colebrook_omega import reference
from colebrook_omega.approx import FlowPoint
from colebrook_omega.exceptions import DomainError, OracleFailureError
from colebrook_omega.reference import (
    colebrook_residual,
    cross_check,
    omega_inv_sqrt_f,
    solve_omega,
    solve_reference,
    wright_omega,
)
from colebrook_omega.sampling import DomainSampler, grid_arrays

scipy_special = pytest.importorskip("scipy.special")


def bisect_colebrook(re, eps, lo=1.0, hi=20.0):
    # Residual is increasing in F, so plain bisection is a safe oracle.
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if colebrook_residual(re, eps, mid) > 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def test_omega_fixed_point_at_one():
    assert wright_omega(1.0).omega == 1.0


def test_omega_at_domain_lower_bound():
    x = 7.5147
    w = wright_omega(x).omega
    assert w + math.log(w) == pytest.approx(x, rel=1e-15)
    assert w == pytest.approx(float(scipy_special.wrightomega(x)), rel=1e-14)


def test_omega_matches_scipy_on_domain():
    x = np.geomspace(1.0, 7e5, 5000)
    w = wright_omega(x).omega
    np.testing.assert_allclose(w, scipy_special.wrightomega(x), rtol=1e-14)


def test_omega_residual_bound():
    x = np.geomspace(1.0, 7e5, 5000)
    res = wright_omega(x).residual
    assert np.all(res <= 1e-14 * np.maximum(1.0, x))


def test_omega_large_x_asymptotics():
    x = 6.18e5
    w = wright_omega(x).omega
    c = math.log(x)
    assert w - x == pytest.approx(-c + c / x, rel=1e-9)


def test_omega_rejects_small_x():
    with pytest.raises(DomainError):
        wright_omega(0.5)


@pytest.mark.parametrize("re, eps", [(4000.0, 0.0), (1e8, 0.05), (1e5, 1e-4)])
def test_newton_matches_bisection(re, eps):
    sol = solve_reference(FlowPoint(re, eps))
    assert sol.residual <= 1e-12
    assert sol.inv_sqrt_f == pytest.approx(bisect_colebrook(re, eps), rel=1e-13)
    assert sol.route == "newton-colebrook"


def test_newton_converges_quickly_from_explicit_start():
    sol = solve_reference(FlowPoint(1e6, 1e-3))
    assert 1 <= sol.iterations <= 6


@pytest.mark.parametrize("re, eps", [(4000.0, 0.05), (1e6, 1e-6), (1e8, 0.0)])
def test_routes_agree(re, eps):
    assert cross_check(FlowPoint(re, eps)) <= 1e-12
    assert solve_omega(FlowPoint(re, eps)).route == "omega-based"


@settings(max_examples=200, deadline=None)
@given(
    st.floats(min_value=math.log(4000.0), max_value=math.log(1e8)),
    st.floats(min_value=0.0, max_value=0.05),
)
def test_routes_agree_random(log_re, eps):
    p = FlowPoint(math.exp(log_re), eps)
    assert cross_check(p) <= 1e-12
    assert solve_reference(p).residual <= 1e-12


def test_vectorised_routes_agree():
    re, eps = DomainSampler(seed_index=101).draw(4096)
    fn = reference.newton_inv_sqrt_f(re, eps)
    fo = omega_inv_sqrt_f(re, eps)
    assert np.max(np.abs(fn - fo) / fn) <= 1e-12


def test_friction_monotone_on_grid():
    n_re, n_eps = 40, 9
    re, eps = grid_arrays(n_re=n_re, n_eps=n_eps)
    f = reference.reference_f(re, eps).reshape(n_eps, n_re)
    assert np.all(np.diff(f, axis=1) < 0)  # decreasing in Re
    assert np.all(np.diff(f, axis=0) > 0)  # increasing in eps


def test_rejects_nonpositive_re():
    with pytest.raises(DomainError):
        solve_reference(FlowPoint(0.0, 0.01))
    with pytest.raises(DomainError):
        solve_reference(FlowPoint(1e5, -1e-3))


def test_newton_failure_is_reported(monkeypatch):
    monkeypatch.setattr(reference, "NEWTON_MAX_ITER", 1)
    monkeypatch.setattr(reference, "NEWTON_RTOL", 0.0)
    with pytest.raises(OracleFailureError) as info:
        solve_reference(FlowPoint(1e5, 1e-3))
    assert info.value.point == FlowPoint(1e5, 1e-3)


def test_omega_failure_is_reported(monkeypatch):
    monkeypatch.setattr(reference, "OMEGA_MAX_ITER", 0)
    with pytest.raises(OracleFailureError):
        wright_omega(10.0)
