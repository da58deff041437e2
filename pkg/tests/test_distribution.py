import math

import numpy as np
import pytest
from scipy import integrate

from hrlab.distribution import (
    KS_GRID,
    empirical_cdf,
    ks_distance,
    ks_distance_from_cdf,
    normal_cdf,
    value_histogram,
)
from hrlab.counting import PhiSpec, window_census
from hrlab.factor_oracle import big_omega, omega
from hrlab.sieve import sieve_range


def density(t):
    return math.exp(-t * t / 2) / math.sqrt(2 * math.pi)


def test_normal_cdf_zero():
    assert normal_cdf(0) == 0.5


@pytest.mark.parametrize("x", [0.5, 1.0, 2.0, 3.0])
def test_normal_cdf_symmetry(x):
    assert abs(normal_cdf(x) - (1 - normal_cdf(-x))) <= 1e-12


def test_normal_cdf_symmetry_grid():
    for x in np.linspace(-8, 8, 100):
        assert abs(normal_cdf(x) + normal_cdf(-x) - 1) <= 1e-12


@pytest.mark.parametrize("x", [-4.0, -1.3, 0.25, 1.0, 2.5, 6.0])
def test_normal_cdf_against_quadrature(x):
    # Phi(x) = 1/2 + integral_0^x density
    part, _ = integrate.quad(density, 0, x, epsabs=1e-14, epsrel=1e-14)
    assert abs(normal_cdf(x) - (0.5 + part)) <= 1e-7


def test_normal_cdf_one():
    assert normal_cdf(1.0) == pytest.approx(0.8413447, abs=1e-7)


@pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
def test_normal_cdf_rejects(bad):
    with pytest.raises(ValueError):
        normal_cdf(bad)


@pytest.mark.parametrize("center", ["loglogN", "loglog_n"])
@pytest.mark.parametrize("f", ["omega", "big_omega"])
def test_ecdf_against_brute_force(f, center):
    N = 3000
    grid = np.linspace(-3, 3, 31)
    fn = omega if f == "omega" else big_omega
    mu = math.log(math.log(N))
    z = []
    for n in range(16, N + 1):
        c = mu if center == "loglogN" else math.log(math.log(n))
        z.append((fn(n) - c) / math.sqrt(c))
    expected = [sum(1 for v in z if v <= k) / len(z) for k in grid]
    got = empirical_cdf(N, f, center, grid)
    assert got.cdf_values.tolist() == expected


def test_ecdf_extremes_and_monotone(stats_1e6):
    e = empirical_cdf(10**6, "omega", "loglogN", [-50.0, 0.0, 50.0], stats=stats_1e6)
    assert e.cdf_values[0] == 0.0 and e.cdf_values[-1] == 1.0
    full = empirical_cdf(10**6, "omega", "loglog_n", KS_GRID, stats=stats_1e6)
    assert np.all(np.diff(full.cdf_values) >= 0)
    assert 0 <= full.cdf_values[0] and full.cdf_values[-1] <= 1


def test_ecdf_at_zero_recorded(stats_1e6):
    v = empirical_cdf(10**6, "omega", "loglogN", [0.0], stats=stats_1e6).cdf_values[0]
    # omega <= 2 is the mass below ln ln 10^6 = 2.626
    counts = stats_1e6.value_counts("omega", 16, 10**6)
    assert v == counts[:3].sum() / (10**6 - 15)
    assert abs(v - normal_cdf(0)) > 0.1


def test_ecdf_rejects_bad_grid():
    with pytest.raises(ValueError):
        empirical_cdf(100, grid=[1.0, 0.0])
    with pytest.raises(ValueError):
        empirical_cdf(100, grid=[])
    with pytest.raises(ValueError):
        empirical_cdf(15)


def test_ks_self_distance():
    phi = [normal_cdf(x) for x in KS_GRID]
    assert ks_distance_from_cdf(KS_GRID, phi) == 0.0


def test_ks_grid():
    assert len(KS_GRID) == 400 and KS_GRID[0] == -5 and KS_GRID[-1] == 5


def test_ks_trend_small(stats_1e6):
    assert ks_distance(10**6, stats=stats_1e6) < ks_distance(10**4, stats=stats_1e6)


def test_ks_big_omega_heavier(stats_1e6):
    w = ks_distance(10**6, "omega", stats=stats_1e6)
    W = ks_distance(10**6, "big_omega", stats=stats_1e6)
    assert W >= w - 0.05


def test_ks_independent_of_shards():
    a = sieve_range(1, 300_000)
    b = sieve_range(1, 300_000, segment=1 << 13, workers=2)
    for center in ("loglogN", "loglog_n"):
        assert ks_distance(300_000, "omega", center, stats=a) == ks_distance(300_000, "omega", center, stats=b)


@pytest.mark.slow
def test_kappa_concentration(stats_1e8):
    a = window_census(10**4, "omega", PhiSpec.kappa(0.5), stats=stats_1e8)[1]
    b = window_census(10**8, "omega", PhiSpec.kappa(0.5), stats=stats_1e8)[1]
    assert b < a


def test_value_histogram(stats_1e6):
    rows = value_histogram(10**6, "omega", stats=stats_1e6)
    assert sum(r[2] for r in rows) == 10**6 - 15
    assert math.fsum(r[3] for r in rows) == pytest.approx(1.0, abs=1e-12)
    assert all(0 < r[4] < 1 for r in rows)
