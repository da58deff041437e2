"""Empirical distribution of the normalized prime-factor count.

The normalized variable is ``(f(n) - c) / sqrt(c)`` over n in [16, N],
where the center c is either the fixed ``ln ln N`` or the per-integer
``ln ln n``. Counts below each grid point are exact integers; only the
final division is floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .counting import CENSUS_START, CENTERS
from .sieve import RangeStats, check_func, resolve_stats

KS_GRID_POINTS = 400
KS_GRID_LO = -5.0
KS_GRID_HI = 5.0
KS_GRID = np.linspace(KS_GRID_LO, KS_GRID_HI, KS_GRID_POINTS)
KS_GRID_SPEC = f"linspace({KS_GRID_LO:g},{KS_GRID_HI:g},{KS_GRID_POINTS})"

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class Ecdf:
    N: int
    f: str
    center: str
    grid: np.ndarray
    counts: np.ndarray
    total: int

    @property
    def cdf_values(self) -> np.ndarray:
        return self.counts / self.total


def normal_cdf(x: float) -> float:
    """Standard normal CDF via the complementary error function."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"x must be finite, got {x}")
    return 0.5 * math.erfc(-x / _SQRT2)


def _normalized(values: np.ndarray, c) -> np.ndarray:
    return (values - c) / np.sqrt(c)


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or len(grid) == 0:
        raise ValueError("grid must be a nonempty 1-d sequence")
    if np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be strictly ascending")
    return grid


def empirical_cdf(N: int, f: str = "omega", center: str = "loglogN", grid=KS_GRID, *, stats: RangeStats | None = None, workers: int = 1) -> Ecdf:
    """Fraction of n in [16, N] whose normalized ``f(n)`` is ``<= k``, per grid point k."""
    N = int(N)
    if N < CENSUS_START:
        raise ValueError(f"N must be at least {CENSUS_START}, got {N}")
    check_func(f)
    if center not in CENTERS:
        raise ValueError(f"center must be one of {CENTERS}, got {center!r}")
    grid = _check_grid(grid)
    st = resolve_stats(N, stats, workers)
    # bins[i] = how many normalized values fall in (grid[i-1], grid[i]]
    bins = np.zeros(len(grid) + 1, dtype=np.int64)
    if center == "loglogN":
        mu = math.log(math.log(N))
        counts = st.value_counts(f, CENSUS_START, N)
        z = _normalized(np.arange(len(counts), dtype=np.float64), mu)
        np.add.at(bins, np.searchsorted(grid, z, side="left"), counts)
    else:
        for first, om, bo in st.chunks(CENSUS_START, N):
            vals = om if f == "omega" else bo
            c = np.log(np.log(np.arange(first, first + len(vals), dtype=np.float64)))
            idx = np.searchsorted(grid, _normalized(vals, c), side="left")
            bins += np.bincount(idx, minlength=len(grid) + 1)
    return Ecdf(N, f, center, grid, np.cumsum(bins)[:-1], N - CENSUS_START + 1)


def ks_distance_from_cdf(grid, cdf_values) -> float:
    """Largest ``|cdf - Phi|`` over the given grid."""
    grid = _check_grid(grid)
    phi = np.array([normal_cdf(x) for x in grid])
    return float(np.max(np.abs(np.asarray(cdf_values, dtype=np.float64) - phi)))


def ks_distance(N: int, f: str = "omega", center: str = "loglogN", *, stats: RangeStats | None = None, workers: int = 1) -> float:
    """Kolmogorov-Smirnov gap to the standard normal on the fixed grid ``KS_GRID``.

    Since f takes only a handful of values at computable N, the 400-point
    grid on [-5, 5] resolves every jump of the empirical CDF.
    """
    ecdf = empirical_cdf(N, f, center, KS_GRID, stats=stats, workers=workers)
    return ks_distance_from_cdf(ecdf.grid, ecdf.cdf_values)


def value_histogram(N: int, f: str = "omega", *, stats: RangeStats | None = None, workers: int = 1) -> list[tuple[int, float, int, float, float]]:
    """Pre-binned plot data at the fixed center ``ln ln N``.

    One row per attained value v of f on [16, N]:
    ``(v, z, count, empirical_mass, normal_mass)`` where z is the
    normalized value and normal_mass is the Gaussian probability of the
    cell between the midpoints to the neighbouring values.
    """
    N = int(N)
    if N < CENSUS_START:
        raise ValueError(f"N must be at least {CENSUS_START}, got {N}")
    check_func(f)
    st = resolve_stats(N, stats, workers)
    mu = math.log(math.log(N))
    counts = st.value_counts(f, CENSUS_START, N)
    total = int(counts.sum())
    sd = math.sqrt(mu)
    rows = []
    for v in np.flatnonzero(counts).tolist():
        lo = -math.inf if v == 0 else (v - 0.5 - mu) / sd
        hi = (v + 0.5 - mu) / sd
        mass = normal_cdf(hi) - (0.0 if lo == -math.inf else normal_cdf(lo))
        c = int(counts[v])
        rows.append((v, (v - mu) / sd, c, c / total, mass))
    return rows
