"""Segmented sieve for omega(n) and Omega(n) over contiguous ranges.

Each segment marks multiples of the base primes ``p <= sqrt(end)`` and of
their powers, while a per-integer product of the prime powers found so far
is tracked exactly. Whatever is left over (``n / product > 1``) is one more
distinct prime. Segments share nothing but the read-only base-prime list,
so they can be computed in any order, by any number of processes.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .errors import ResourceLimitError

PRIMES_CAP = 10**9
RANGE_CAP = 10**12
DEFAULT_SEGMENT = 2**20
CHUNK = 2**22

# Column widths of the joint (omega, Omega) histogram. omega <= 15 and
# Omega <= 63 hold for every n <= 10**12.
OMEGA_SLOTS = 16
BIG_OMEGA_SLOTS = 64

ARITH_FUNCS = ("omega", "big_omega")


def check_func(f: str) -> str:
    if f not in ARITH_FUNCS:
        raise ValueError(f"f must be one of {ARITH_FUNCS}, got {f!r}")
    return f


@dataclass(frozen=True)
class PrimeList:
    """All primes up to ``limit``, ascending."""

    limit: int
    primes: np.ndarray

    def __len__(self) -> int:
        return len(self.primes)

    def count_upto(self, x: int) -> int:
        """pi(x) for ``x <= limit``."""
        if x > self.limit:
            raise ValueError(f"{x} exceeds the list limit {self.limit}")
        return int(np.searchsorted(self.primes, x, side="right"))


def _odd_sieve(limit: int) -> np.ndarray:
    # index i stands for 2*i + 1
    size = (limit + 1) // 2
    flags = np.ones(size, dtype=bool)
    flags[0] = False
    for i in range(1, (math.isqrt(limit) - 1) // 2 + 1):
        if flags[i]:
            p = 2 * i + 1
            flags[p * p // 2 :: p] = False
    odd = 2 * np.flatnonzero(flags).astype(np.int64) + 1
    return np.concatenate((np.array([2], dtype=np.int64), odd))


def primes_up_to(limit: int) -> PrimeList:
    """Sieve of Eratosthenes over odd numbers.

    >>> primes_up_to(10).primes.tolist()
    [2, 3, 5, 7]
    """
    limit = int(limit)
    if limit < 2:
        raise ValueError(f"limit must be at least 2, got {limit}")
    if limit > PRIMES_CAP:
        raise ValueError(f"limit must be at most {PRIMES_CAP}, got {limit}")
    try:
        primes = _odd_sieve(limit)
    except MemoryError as exc:
        raise ResourceLimitError(f"not enough memory to list primes up to {limit}") from exc
    return PrimeList(limit, primes)


def _base_primes(end: int) -> np.ndarray:
    root = math.isqrt(end)
    if root < 2:
        return np.empty(0, dtype=np.int64)
    return primes_up_to(root).primes


def _max_omega(end: int) -> int:
    # largest k with primorial(k) <= end
    k, acc = 0, 1
    for p in _SMALL_PRIMES:
        if acc * p > end:
            break
        acc *= p
        k += 1
    return k


def _sieve_segment(lo: int, hi: int, base: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """omega and Omega for every n in ``[lo, hi)``."""
    length = hi - lo
    dtype = np.uint32 if hi <= 2**32 else np.uint64
    om = np.zeros(length, dtype=np.uint8)
    bo = np.zeros(length, dtype=np.uint8)
    found = np.ones(length, dtype=dtype)
    for p in base.tolist():
        if p * p >= hi:
            break
        start = -lo % p
        if start >= length:
            continue
        om[start::p] += 1
        bo[start::p] += 1
        found[start::p] *= p
        q = p * p
        while q < hi:
            start = -lo % q
            if start < length:
                bo[start::q] += 1
                found[start::q] *= p
            q *= p
    # Anything not accounted for is a single prime above sqrt(hi).
    residual = (found != np.arange(lo, hi, dtype=dtype)).view(np.uint8)
    om += residual
    bo += residual
    if length and int(om.max()) > _max_omega(hi - 1):
        raise AssertionError(f"omega exceeds the primorial bound in [{lo}, {hi})")
    return om, bo


def _segment_job(args):
    lo, hi, base = args
    return _sieve_segment(lo, hi, base)


@dataclass(eq=False)
class RangeStats:
    """Per-integer ``(omega, Omega)`` for ``n`` in ``[start, start + len)``.

    ``omega`` and ``big_omega`` are parallel ``uint8`` arrays. Histograms
    over sub-ranges are memoized on the instance, so treat the arrays as
    read-only.
    """

    start: int
    omega: np.ndarray
    big_omega: np.ndarray
    _hist: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.omega.shape != self.big_omega.shape:
            raise ValueError("omega and big_omega must have the same length")

    def __len__(self) -> int:
        return len(self.omega)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RangeStats):
            return NotImplemented
        return (
            self.start == other.start
            and np.array_equal(self.omega, other.omega)
            and np.array_equal(self.big_omega, other.big_omega)
        )

    @property
    def end(self) -> int:
        """One past the last integer covered."""
        return self.start + len(self)

    @property
    def values(self) -> np.ndarray:
        """``(len, 2)`` array of ``(omega, Omega)`` pairs."""
        return np.stack((self.omega, self.big_omega), axis=1)

    def func(self, f: str) -> np.ndarray:
        return self.omega if check_func(f) == "omega" else self.big_omega

    def covers(self, lo: int, hi: int) -> bool:
        """True when ``[lo, hi]`` (inclusive) lies inside the range."""
        return self.start <= lo and hi < self.end

    def _slice(self, lo: int, hi: int) -> slice:
        if not self.covers(lo, hi):
            raise ValueError(
                f"[{lo}, {hi}] is not inside the sieved range [{self.start}, {self.end - 1}]"
            )
        return slice(lo - self.start, hi - self.start + 1)

    def chunks(self, lo: int, hi: int, size: int = CHUNK) -> Iterator[tuple[int, np.ndarray, np.ndarray]]:
        """Yield ``(first_n, omega, Omega)`` shards covering ``[lo, hi]``."""
        sl = self._slice(lo, hi)
        for a in range(sl.start, sl.stop, size):
            b = min(a + size, sl.stop)
            yield self.start + a, self.omega[a:b], self.big_omega[a:b]

    def joint_counts(self, lo: int, hi: int) -> np.ndarray:
        """Exact ``(16, 64)`` histogram of ``(omega, Omega)`` over ``[lo, hi]``."""
        key = (lo, hi)
        if key not in self._hist:
            total = np.zeros(OMEGA_SLOTS * BIG_OMEGA_SLOTS, dtype=np.int64)
            for _, om, bo in self.chunks(lo, hi):
                code = om.astype(np.int32) * BIG_OMEGA_SLOTS + bo
                total += np.bincount(code, minlength=OMEGA_SLOTS * BIG_OMEGA_SLOTS)
            self._hist[key] = total.reshape(OMEGA_SLOTS, BIG_OMEGA_SLOTS)
        return self._hist[key]

    def value_counts(self, f: str, lo: int, hi: int) -> np.ndarray:
        """``counts[v]`` = number of n in ``[lo, hi]`` with ``f(n) == v``."""
        joint = self.joint_counts(lo, hi)
        return joint.sum(axis=1) if check_func(f) == "omega" else joint.sum(axis=0)


def _segments(start: int, end: int, segment: int):
    for lo in range(start, end, segment):
        yield lo, min(lo + segment, end)


def sieve_range(start: int, length: int, *, workers: int = 1, segment: int = DEFAULT_SEGMENT) -> RangeStats:
    """Compute omega and Omega for every n in ``[start, start + length)``.

    Parameters
    ----------
    start, length : int
        ``start >= 1``, ``length >= 1`` and ``start + length - 1 <= 10**12``.
    workers : int
        Number of processes. The output does not depend on it.
    segment : int
        Integers per work unit. The output does not depend on it either.
    """
    start, length = int(start), int(length)
    if start < 1:
        raise ValueError(f"start must be at least 1, got {start}")
    if length < 1:
        raise ValueError(f"len must be at least 1, got {length}")
    if start + length - 1 > RANGE_CAP:
        raise ValueError(f"range end {start + length - 1} exceeds the supported cap {RANGE_CAP}")
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if segment < 1:
        raise ValueError(f"segment must be at least 1, got {segment}")
    end = start + length
    try:
        base = _base_primes(end - 1)
        omega_out = np.empty(length, dtype=np.uint8)
        big_out = np.empty(length, dtype=np.uint8)
        jobs = [(lo, hi, base) for lo, hi in _segments(start, end, segment)]
        if workers == 1 or len(jobs) == 1:
            results = map(_segment_job, jobs)
            pool = None
        else:
            pool = ProcessPoolExecutor(max_workers=workers)
            results = pool.map(_segment_job, jobs)
        try:
            for (lo, hi, _), (om, bo) in zip(jobs, results):
                omega_out[lo - start : hi - start] = om
                big_out[lo - start : hi - start] = bo
        finally:
            if pool is not None:
                pool.shutdown()
    except MemoryError as exc:
        raise ResourceLimitError(f"not enough memory to sieve {length} integers") from exc
    return RangeStats(start, omega_out, big_out)


_PREFIX: RangeStats | None = None


def stats_through(N: int, *, workers: int = 1) -> RangeStats:
    """Sieved stats for ``[1, N]``, reusing the largest prefix computed so far."""
    global _PREFIX
    N = int(N)
    if _PREFIX is None or _PREFIX.end <= N:
        _PREFIX = sieve_range(1, N, workers=workers)
    return _PREFIX


def clear_prefix_cache() -> None:
    global _PREFIX
    _PREFIX = None


def resolve_stats(N: int, stats: RangeStats | None, workers: int = 1) -> RangeStats:
    """Return stats covering ``[1, N]``: the given ones, or a fresh prefix sieve."""
    if stats is None:
        return stats_through(N, workers=workers)
    if stats.start != 1 or stats.end <= N:
        raise ValueError(f"stats cover [{stats.start}, {stats.end - 1}], need [1, {N}]")
    return stats


_SMALL_PRIMES = _odd_sieve(400).tolist()[:64]


def primorial(k: int) -> int:
    """Product of the first ``k`` primes, ``1 <= k <= 64``."""
    k = int(k)
    if not 1 <= k <= 64:
        raise ValueError(f"k must be in [1, 64], got {k}")
    return math.prod(_SMALL_PRIMES[:k])


def max_order_probe(k_max: int) -> list[tuple[int, int, float]]:
    """``(k, primorial(k), k * ln ln n / ln n)`` for ``k = 3 .. k_max``.

    Primorials maximise omega for their size, so the ratio tracks how close
    omega gets to ``ln n / ln ln n``.
    """
    k_max = int(k_max)
    if k_max < 3:
        raise ValueError(f"k_max must be at least 3, got {k_max}")
    if k_max > 64:
        raise ValueError(f"k_max must be at most 64, got {k_max}")
    rows = []
    for k in range(3, k_max + 1):
        n = primorial(k)
        ln = math.log(n)
        rows.append((k, n, k * math.log(ln) / ln))
    return rows
