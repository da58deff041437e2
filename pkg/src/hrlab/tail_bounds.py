"""Tail-bound calculators for the normalized deviation of omega(n).

For a threshold A (in standard deviations) and an even moment order r,
knowing the Gaussian r-th moment gives the Markov-type bound
``(r-1)!! / A^r``. With ``r = 2`` it is Chebyshev's ``1/A^2``; the best
even r is the largest one below ``1 + A^2``, and for large A the optimum
approaches ``sqrt(2) exp(-A^2 / 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .counting import CENSUS_START
from .sieve import RangeStats, check_func, resolve_stats

R_MAX = 1000
_EXACT_R = 20

# (r, A, printed Chebyshev value, printed higher-moment value) in the
# published order.
PAPER_TABLE = (
    (4, 2, Fraction(1, 4), Fraction(3, 16)),
    (4, 10, Fraction(1, 100), Fraction(3, 10000)),
    (6, 2, Fraction(1, 4), Fraction(15, 64)),
    (6, 10, Fraction(1, 100), Fraction(3, 200000)),
    (8, 10, Fraction(1, 100), Fraction(315, 781253)),
    (8, 20, Fraction(1, 400), Fraction(41, 1000000000)),
)
DISCREPANCY_RTOL = 1e-6


def _check_A(A: float) -> float:
    A = float(A)
    if not A > 0 or not math.isfinite(A):
        raise ValueError(f"A must be a positive finite number, got {A}")
    return A


def _check_r(r: int) -> int:
    if int(r) != r:
        raise ValueError(f"r must be an integer, got {r}")
    r = int(r)
    if r < 2 or r % 2:
        raise ValueError(f"r must be a positive even integer, got {r}")
    if r > R_MAX:
        raise ValueError(f"r must be at most {R_MAX}, got {r}")
    return r


def chebyshev_bound(A: float) -> float:
    """``1 / A^2``."""
    A = _check_A(A)
    return 1.0 / A**2


def higher_moment_bound(A: float, r: int) -> float:
    """``r! / (2^(r/2) (r/2)! A^r)``, i.e. ``(r-1)!! / A^r``.

    Exact integer numerator for ``r <= 20``. Above that the bound is the
    exponential of a compensated sum of ``ln(j / A^2)`` over odd
    ``j < r``, which stays in floating range for every supported r and keeps
    neighbouring orders consistent: a factor of exactly 1 adds exactly 0.
    Bounds beyond the float range (tiny A, huge r) come back as ``inf``.
    """
    A = _check_A(A)
    r = _check_r(r)
    if r <= _EXACT_R:
        return math.prod(range(1, r, 2)) / A**r
    a2 = A * A
    log_bound = math.fsum(math.log(j / a2) for j in range(1, r, 2))
    try:
        return math.exp(log_bound)
    except OverflowError:
        return math.inf


def optimal_even_r(A: float) -> int:
    """Largest even r with ``r < 1 + A^2``, at least 2."""
    A = _check_A(A)
    return max(2 * math.ceil((1 + A * A) / 2) - 2, 2)


def gaussian_tail_bound(A: float) -> float:
    """``sqrt(2) exp(-A^2 / 2)``."""
    A = float(A)
    if not A >= 0 or not math.isfinite(A):
        raise ValueError(f"A must be a nonnegative finite number, got {A}")
    return math.sqrt(2.0) * math.exp(-A * A / 2)


def empirical_tail(N: int, f: str = "omega", A: float = 2.0, *, stats: RangeStats | None = None, workers: int = 1) -> float:
    """Fraction of n in ``[16, N]`` with ``|f(n) - ln ln n| / sqrt(ln ln n) > A``."""
    N = int(N)
    if N < CENSUS_START:
        raise ValueError(f"N must be at least {CENSUS_START}, got {N}")
    A = _check_A(A)
    check_func(f)
    st = resolve_stats(N, stats, workers)
    hits = 0
    for first, om, bo in st.chunks(CENSUS_START, N):
        vals = om if f == "omega" else bo
        c = np.log(np.log(np.arange(first, first + len(vals), dtype=np.float64)))
        hits += int(np.count_nonzero(np.abs(vals - c) / np.sqrt(c) > A))
    return hits / (N - CENSUS_START + 1)


@dataclass(frozen=True)
class BoundRow:
    A: float
    r: int
    chebyshev: float
    higher_moment: float
    gaussian: float
    empirical: float | None = None
    paper_value: Fraction | None = None

    @property
    def discrepancy(self) -> bool | None:
        """True when a printed value is more than 1e-6 (relative) off the formula."""
        if self.paper_value is None:
            return None
        printed = float(self.paper_value)
        return abs(printed - self.higher_moment) > DISCREPANCY_RTOL * abs(self.higher_moment)


def _paper_lookup(A: float, r: int) -> Fraction | None:
    for pr, pa, _, value in PAPER_TABLE:
        if pr == r and pa == A:
            return value
    return None


def bounds_table(A_list=None, r_list=None, N: int | None = None, *, f: str = "omega", stats: RangeStats | None = None, workers: int = 1) -> list[BoundRow]:
    """Bound comparison rows for paired thresholds and moment orders.

    ``A_list[i]`` goes with ``r_list[i]``. With neither given, the six
    published (r, A) rows are used in their published order. Rows that
    match a published entry carry its printed value. When ``N`` is given
    each row also gets the measured tail fraction of ``f`` at that A.
    """
    if A_list is None and r_list is None:
        r_list = [row[0] for row in PAPER_TABLE]
        A_list = [row[1] for row in PAPER_TABLE]
    if A_list is None or r_list is None or len(A_list) != len(r_list):
        raise ValueError("A_list and r_list must be given together with equal lengths")
    st = resolve_stats(N, stats, workers) if N is not None else None
    tails: dict[float, float] = {}
    rows = []
    for A, r in zip(A_list, r_list):
        A = _check_A(A)
        r = _check_r(r)
        emp = None
        if st is not None:
            if A not in tails:
                tails[A] = empirical_tail(N, f, A, stats=st)
            emp = tails[A]
        rows.append(
            BoundRow(
                A=A,
                r=r,
                chebyshev=chebyshev_bound(A),
                higher_moment=higher_moment_bound(A, r),
                gaussian=gaussian_tail_bound(A),
                empirical=emp,
                paper_value=_paper_lookup(A, r),
            )
        )
    return rows
