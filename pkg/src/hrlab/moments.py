"""Empirical moments of omega and Omega over [1, N].

Power sums ``sum f(n)^j`` are exact Python integers built from the value
histogram. The central moment about ``mu = ln ln N`` is expanded
binomially in exact rational arithmetic, with ``mu`` taken as the exact
value of its float, so the only rounding is the final conversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .sieve import RangeStats, check_func, resolve_stats

K_MAX = 10


@dataclass(frozen=True)
class MomentReport:
    N: int
    f: str
    k: int
    central: float
    normalized: float
    gaussian_target: float

    @property
    def delta(self) -> float:
        return self.normalized - self.gaussian_target


def _check_N(N: int) -> int:
    # ln ln N > 0 from N = 3 on
    N = int(N)
    if N < 3:
        raise ValueError(f"N must be at least 3, got {N}")
    return N


def power_sums(N: int, f: str, k: int, *, stats: RangeStats | None = None, workers: int = 1) -> list[int]:
    """``[sum_{n<=N} f(n)^j for j in 0..k]`` as exact integers."""
    N = int(N)
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    counts = resolve_stats(N, stats, workers).value_counts(check_func(f), 1, N).tolist()
    return [sum(c * v**j for v, c in enumerate(counts)) for j in range(k + 1)]


def mean_variance(N: int, f: str = "omega", *, stats: RangeStats | None = None, workers: int = 1) -> tuple[float, float]:
    """Mean and (population) variance of ``f(n)`` over ``1 <= n <= N``.

    Uses exact sums, so ``mean_variance(10)[0] == 1.1``.
    """
    N = int(N)
    s0, s1, s2 = power_sums(N, f, 2, stats=stats, workers=workers)
    return s1 / s0, float(Fraction(s0 * s2 - s1 * s1, s0 * s0))


def _central_exact(sums: list[int], mu: Fraction, k: int) -> Fraction:
    n = sums[0]
    acc = sum(math.comb(k, j) * sums[j] * (-mu) ** (k - j) for j in range(k + 1))
    return acc / n


def gaussian_moment_exact(k: int) -> int:
    """``E[Z^k]`` for standard normal Z as an integer: 0 or ``(k-1)!!``."""
    k = int(k)
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")
    if k % 2:
        return 0
    return math.factorial(k) // (2 ** (k // 2) * math.factorial(k // 2))


def gaussian_moment(k: int) -> float:
    """``E[Z^k]``: zero for odd k, ``k! / (2^(k/2) (k/2)!)`` for even k."""
    return float(gaussian_moment_exact(k))


def central_moment(N: int, f: str = "omega", k: int = 2, *, stats: RangeStats | None = None, workers: int = 1) -> MomentReport:
    """``(1/N) sum_{n<=N} (f(n) - ln ln N)^k`` and its normalization.

    The sum runs over every n from 1; the center is fixed at ``ln ln N``.
    ``normalized`` divides by ``(ln ln N)^(k/2)``.
    """
    N = _check_N(N)
    k = int(k)
    if not 1 <= k <= K_MAX:
        raise ValueError(f"k must be in [1, {K_MAX}], got {k}")
    sums = power_sums(N, f, k, stats=stats, workers=workers)
    mu = math.log(math.log(N))
    central = float(_central_exact(sums, Fraction(mu), k))
    return MomentReport(
        N=N,
        f=f,
        k=k,
        central=central,
        normalized=central / mu ** (k / 2),
        gaussian_target=gaussian_moment(k),
    )


def moment_match_table(N: int, f: str = "omega", k_max: int = 6, *, stats: RangeStats | None = None, workers: int = 1) -> list[MomentReport]:
    """One :class:`MomentReport` per ``k = 1 .. k_max``."""
    N = _check_N(N)
    k_max = int(k_max)
    if not 1 <= k_max <= K_MAX:
        raise ValueError(f"k_max must be in [1, {K_MAX}], got {k_max}")
    st = resolve_stats(N, stats, workers)
    return [central_moment(N, f, k, stats=st) for k in range(1, k_max + 1)]
