"""Counting functions over [1, N]: pi_nu, omega-bar_nu, Q, Mertens sums,
Landau ratios and concentration-window censuses.

Every count is an exact integer read off the joint (omega, Omega)
histogram of the sieved range. Squarefree n are exactly those with
``omega(n) == Omega(n)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .sieve import RangeStats, check_func, primes_up_to, resolve_stats

CENSUS_START = 16
CENTERS = ("loglogN", "loglog_n")

COUNT_KINDS = ("pi_nu", "omega_bar_nu", "squarefree_Q", "mertens", "landau_ratio", "window_census")
_NEEDS_NU = {"pi_nu", "omega_bar_nu", "landau_ratio"}


@dataclass(frozen=True)
class CountReport:
    """One counting query and its answer."""

    N: int
    kind: str
    value: Any
    nu: int | None = None
    params: tuple[tuple[str, Any], ...] = ()

    def __post_init__(self):
        if self.kind not in COUNT_KINDS:
            raise ValueError(f"unknown count kind {self.kind!r}")
        if (self.nu is not None) != (self.kind in _NEEDS_NU):
            raise ValueError(f"kind {self.kind!r} {'requires' if self.kind in _NEEDS_NU else 'takes no'} nu")


@dataclass(frozen=True)
class MertensSums:
    N: int
    sum_recip: float
    sum_logp_over_p: float

    @property
    def offset_estimate(self) -> float:
        """``sum 1/p - ln ln N``; tends to the Meissel-Mertens constant."""
        return self.sum_recip - math.log(math.log(self.N))


def _check_N(N: int, minimum: int = 1) -> int:
    N = int(N)
    if N < minimum:
        raise ValueError(f"N must be at least {minimum}, got {N}")
    return N


def _joint(N: int, stats: RangeStats | None, workers: int) -> np.ndarray:
    return resolve_stats(N, stats, workers).joint_counts(1, N)


def pi_nu(N: int, nu: int, *, stats: RangeStats | None = None, workers: int = 1) -> int:
    """Number of squarefree ``n <= N`` with exactly ``nu`` prime factors.

    >>> pi_nu(20, 2)
    4
    """
    N = _check_N(N)
    nu = int(nu)
    if nu < 1:
        raise ValueError(f"nu must be at least 1, got {nu}")
    joint = _joint(N, stats, workers)
    return int(joint[nu, nu]) if nu < joint.shape[0] else 0


def omega_bar_nu(N: int, nu: int, *, stats: RangeStats | None = None, workers: int = 1) -> int:
    """Number of ``n <= N`` with ``omega(n) == nu``, repeated factors allowed."""
    N = _check_N(N)
    nu = int(nu)
    if nu < 0:
        raise ValueError(f"nu must be nonnegative, got {nu}")
    joint = _joint(N, stats, workers)
    return int(joint[nu].sum()) if nu < joint.shape[0] else 0


def q_count(N: int, *, stats: RangeStats | None = None, workers: int = 1) -> int:
    """Number of squarefree ``n <= N``, counting ``n = 1``."""
    N = _check_N(N)
    return int(np.trace(_joint(N, stats, workers)))


def mertens_sums(N: int) -> MertensSums:
    """Compensated sums of ``1/p`` and ``ln p / p`` over primes ``p <= N``."""
    N = _check_N(N, 3)
    p = primes_up_to(N).primes.astype(np.float64)
    return MertensSums(N, math.fsum(1.0 / p), math.fsum(np.log(p) / p))


def landau_ratio(N: int, nu: int, *, stats: RangeStats | None = None, workers: int = 1) -> float:
    """``pi_nu(N)`` divided by ``(N / ln N) (ln ln N)^(nu-1) / (nu-1)!``."""
    N = _check_N(N, 16)
    count = pi_nu(N, nu, stats=stats, workers=workers)
    ln = math.log(N)
    lnln = math.log(ln)
    return count / (N / ln * lnln ** (nu - 1) / math.factorial(nu - 1))


def iroot(n: int, k: int) -> int:
    """Exact ``floor(n ** (1/k))`` for ``n >= 0``, ``k >= 1``."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if k == 1 or n < 2:
        return n
    x = int(round(n ** (1.0 / k)))
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def prime_power_count(N: int) -> int:
    """``sum_k pi(floor(N^(1/k)))``: the number of prime powers ``<= N``."""
    N = _check_N(N)
    if N < 2:
        return 0
    plist = primes_up_to(N)
    total, k = 0, 1
    while (root := iroot(N, k)) >= 2:
        total += plist.count_upto(root)
        k += 1
    return total


def pi_nu_upper_census(
    N: int, a1: float = 10.0, a2: float = 2.0, *, stats: RangeStats | None = None, workers: int = 1
) -> list[tuple[int, int, float, bool]]:
    """Check ``pi_{nu+1}(N) < a1 (N/ln N) (ln ln N + a2)^nu / nu!`` for every nu.

    Returns ``(nu, pi_{nu+1}(N), bound, holds)`` rows for
    ``nu = 0 .. max omega`` on ``[1, N]``.
    """
    N = _check_N(N, 16)
    joint = _joint(N, stats, workers)
    ln = math.log(N)
    lnln = math.log(ln)
    top = int(np.flatnonzero(joint.sum(axis=1))[-1])
    rows = []
    for nu in range(top + 1):
        count = int(joint[nu + 1, nu + 1]) if nu + 1 < joint.shape[0] else 0
        bound = a1 * N / ln * (lnln + a2) ** nu / math.factorial(nu)
        rows.append((nu, count, bound, count < bound))
    return rows


@dataclass(frozen=True)
class PhiSpec:
    """Width of a concentration window.

    ``const(c)``: ``phi = c``; ``power(d)``: ``phi = center ** d``; both
    mark n with ``|f(n) - center| >= phi * sqrt(center)``. ``kappa(k)``
    instead marks ``|f(n) - center| >= k * center``.
    """

    kind: str
    param: float = field(default=1.0)

    def __post_init__(self):
        if self.kind not in ("const", "power", "kappa"):
            raise ValueError(f"unknown phi kind {self.kind!r}")
        if not self.param > 0:
            raise ValueError(f"phi parameter must be positive, got {self.param}")

    @classmethod
    def const(cls, c: float) -> "PhiSpec":
        return cls("const", float(c))

    @classmethod
    def power(cls, delta: float) -> "PhiSpec":
        return cls("power", float(delta))

    @classmethod
    def kappa(cls, k: float) -> "PhiSpec":
        return cls("kappa", float(k))

    @classmethod
    def parse(cls, text: str) -> "PhiSpec":
        """Parse ``kind:param``, e.g. ``power:0.1``."""
        kind, sep, param = text.partition(":")
        if not sep:
            raise ValueError(f"phi must look like kind:param, got {text!r}")
        return cls(kind, float(param))

    def half_width(self, center):
        """Minimum |f - center| that counts as outside the window."""
        if self.kind == "kappa":
            return self.param * center
        phi = self.param if self.kind == "const" else center**self.param
        return phi * np.sqrt(center)


def window_census(
    N: int,
    f: str = "omega",
    phi: PhiSpec = PhiSpec("power", 0.1),
    center: str = "loglogN",
    *,
    squarefree_only: bool = False,
    stats: RangeStats | None = None,
    workers: int = 1,
) -> tuple[int, float]:
    """Count ``n`` in ``[16, N]`` whose ``f(n)`` falls outside the window.

    Returns ``(outside, fraction)`` where the fraction is taken over the
    ``N - 15`` integers examined, or over the squarefree ones among them
    when ``squarefree_only`` is set.
    """
    N = _check_N(N, CENSUS_START)
    check_func(f)
    if center not in CENTERS:
        raise ValueError(f"center must be one of {CENTERS}, got {center!r}")
    st = resolve_stats(N, stats, workers)
    if center == "loglogN":
        mu = math.log(math.log(N))
        width = phi.half_width(mu)
        joint = st.joint_counts(CENSUS_START, N)
        if squarefree_only:
            counts = np.diagonal(joint)
        else:
            counts = joint.sum(axis=1) if f == "omega" else joint.sum(axis=0)
        values = np.arange(len(counts), dtype=np.float64)
        outside = int(counts[np.abs(values - mu) >= width].sum())
        total = int(counts.sum())
    else:
        outside = total = 0
        for first, om, bo in st.chunks(CENSUS_START, N):
            vals = om if f == "omega" else bo
            c = np.log(np.log(np.arange(first, first + len(vals), dtype=np.float64)))
            hit = np.abs(vals - c) >= phi.half_width(c)
            if squarefree_only:
                sf = om == bo
                hit &= sf
                total += int(np.count_nonzero(sf))
            else:
                total += len(vals)
            outside += int(np.count_nonzero(hit))
    return outside, (outside / total if total else 0.0)
