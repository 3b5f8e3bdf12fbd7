from fractions import Fraction

import numpy as np
import pytest

from colebrook_omega.approx import FlowPoint
from colebrook_omega.exceptions import StreamExhaustedError
from colebrook_omega.sampling import (
    BITS,
    DEFAULT_DOMAIN,
    DomainSampler,
    DomainSpec,
    SobolStream,
    grid,
    grid_arrays,
    map_to_domain,
    map_to_domain_batch,
)


def brute_sobol(n_points):
    # Direct definition from m-values: dim 1 has m_k = 1, dim 2 follows
    # m_k = 2 m_{k-1} xor m_{k-1}. Point n uses the Gray code of n.
    m2 = [1]
    for _ in range(1, 12):
        m2.append((2 * m2[-1]) ^ m2[-1])
    v1 = [Fraction(1, 2 ** (k + 1)) for k in range(12)]
    v2 = [Fraction(m2[k], 2 ** (k + 1)) for k in range(12)]
    out = []
    for n in range(1, n_points + 1):
        g = n ^ (n >> 1)
        a = b = 0
        for k in range(12):
            if g >> k & 1:
                a ^= int(v1[k] * 2**12)
                b ^= int(v2[k] * 2**12)
        out.append((a / 2**12, b / 2**12))
    return out


def test_first_points():
    s = SobolStream()
    assert s.next() == (0.5, 0.5)
    assert s.next() == (0.75, 0.25)
    assert s.next() == (0.25, 0.75)


def test_matches_brute_force_definition():
    pts = SobolStream().take(1000)
    np.testing.assert_array_equal(pts, np.array(brute_sobol(1000)))


def test_matches_scipy_unscrambled():
    qmc = pytest.importorskip("scipy.stats.qmc")
    ref = qmc.Sobol(d=2, scramble=False).random_base2(12)[1:]
    np.testing.assert_array_equal(SobolStream().take(4095), ref)


def test_next_and_take_agree():
    a = SobolStream(5)
    b = SobolStream(5)
    stepped = np.array([a.next() for _ in range(300)])
    np.testing.assert_array_equal(stepped, b.take(300))
    assert a.index == b.index == 305
    assert a.next() == b.next()


def test_iteration_protocol():
    it = iter(SobolStream())
    assert next(it) == (0.5, 0.5)


def test_dyadic_balance():
    # With the zero point prepended, 2^10 points fill every 2^-5 x 2^-5 box once.
    pts = np.vstack([[0.0, 0.0], SobolStream().take(1023)])
    cells = (pts * 32).astype(int)
    counts = np.zeros((32, 32), int)
    np.add.at(counts, (cells[:, 0], cells[:, 1]), 1)
    assert np.all(counts == 1)


def test_deterministic():
    np.testing.assert_array_equal(SobolStream(17).take(500), SobolStream(17).take(500))


def test_coverage_large_n():
    re, eps = DomainSampler().draw(1 << 20)
    assert re.min() < 4000 * 1.0001 and re.max() > 1e8 / 1.0001
    assert eps.min() < 1e-7 and eps.max() > 0.05 * (1 - 1e-6)
    assert np.all((re >= 4000) & (re <= 1e8) & (eps >= 0) & (eps <= 0.05))


def test_stream_exhaustion():
    s = SobolStream((1 << BITS) - 1)
    s.next()
    with pytest.raises(StreamExhaustedError):
        s.next()
    with pytest.raises(StreamExhaustedError):
        SobolStream((1 << BITS) - 2).take(3)


def test_index_must_be_positive():
    with pytest.raises(ValueError):
        SobolStream(0)


def test_map_corners_and_midpoint():
    assert map_to_domain((0.0, 0.0)) == FlowPoint(4000.0, 0.0)
    hi = map_to_domain((1.0, 1.0))
    assert hi.re == pytest.approx(1e8, rel=1e-14) and hi.eps == 0.05
    mid = map_to_domain((0.5, 0.5))
    assert mid.re == pytest.approx(632455.532, rel=1e-9)
    assert mid.eps == 0.025


def test_map_batch_matches_scalar():
    u = SobolStream().take(64)
    re, eps = map_to_domain_batch(u)
    for (r, e), row in zip(zip(re, eps), u):
        assert map_to_domain(row) == FlowPoint(r, e)


def test_linear_and_log_eps_scales():
    lin = DomainSpec(re_scale="linear")
    assert map_to_domain((0.5, 0.0), lin).re == pytest.approx(0.5 * (4000 + 1e8))
    logeps = DomainSpec(eps_scale="log-with-floor", eps_floor=1e-6)
    assert map_to_domain((0.0, 0.0), logeps).eps == pytest.approx(1e-6)
    assert map_to_domain((0.0, 0.5), logeps).eps == pytest.approx(np.sqrt(1e-6 * 0.05))


def test_grid_layout():
    re, eps = grid_arrays(n_re=5, n_eps=3)
    assert len(re) == 15
    assert (re[0], eps[0]) == (4000.0, 0.0)
    assert (re[-1], eps[-1]) == (1e8, 0.05)
    assert re[2] == pytest.approx(632455.532, rel=1e-9)
    assert eps[5] == 0.025
    pts = grid(n_re=5, n_eps=3)
    assert pts[0] == FlowPoint(4000.0, 0.0)


def test_grid_needs_two_points():
    with pytest.raises(ValueError):
        grid_arrays(n_re=1)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(re_min=0.0),
        dict(re_min=1e8, re_max=4000.0),
        dict(eps_min=-1.0),
        dict(eps_min=0.1, eps_max=0.05),
        dict(re_scale="cubic"),
        dict(eps_scale="log"),
    ],
)
def test_domain_spec_validation(kwargs):
    with pytest.raises(ValueError):
        DomainSpec(**kwargs)


def test_sampler_advances():
    s = DomainSampler(DEFAULT_DOMAIN)
    a = s.draw(10)
    b = s.draw(10)
    both = DomainSampler().draw(20)
    np.testing.assert_array_equal(np.concatenate([a[0], b[0]]), both[0])
