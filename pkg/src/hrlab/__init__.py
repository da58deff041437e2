"""Prime-factor counting statistics: omega(n), Omega(n), their counts,
moments and distribution, and moment-based tail bounds."""

from .counting import (
    CountReport,
    MertensSums,
    PhiSpec,
    landau_ratio,
    mertens_sums,
    omega_bar_nu,
    pi_nu,
    pi_nu_upper_census,
    prime_power_count,
    q_count,
    window_census,
)
from .distribution import Ecdf, empirical_cdf, ks_distance, normal_cdf
from .errors import CacheFormatError, HRLabError, ResourceLimitError
from .factor_oracle import FactorMap, big_omega, factor_small, is_squarefree, omega
from .moments import MomentReport, central_moment, gaussian_moment, mean_variance, moment_match_table
from .sieve import PrimeList, RangeStats, max_order_probe, primes_up_to, primorial, sieve_range, stats_through
from .tail_bounds import (
    BoundRow,
    bounds_table,
    chebyshev_bound,
    empirical_tail,
    gaussian_tail_bound,
    higher_moment_bound,
    optimal_even_r,
)

__version__ = "0.1.0"
