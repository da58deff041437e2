"""Moments of omega(n) about ln ln N next to Gaussian moments.

Convergence is in powers of 1/sqrt(ln ln N), so even at N = 10^8 the
normalized moments are far from their limits; the trend is what to look at.

Run:  python demos/03_moments.py
"""
import math

from hrlab import gaussian_moment, mean_variance, moment_match_table, stats_through

ladder = (10**4, 10**6, 10**8)
stats = stats_through(ladder[-1])

for N in ladder:
    mean, var = mean_variance(N, stats=stats)
    mu = math.log(math.log(N))
    print(f"N = {N:>9}: mean - lnlnN = {mean - mu:.4f}, var / lnlnN = {var / mu:.4f}")

print("\n k   " + "".join(f"N=10^{round(math.log10(N))}".rjust(12) for N in ladder) + "    E[Z^k]")
tables = [moment_match_table(N, "omega", 8, stats=stats) for N in ladder]
for k in range(1, 9):
    row = "".join(f"{t[k - 1].normalized:12.4f}" for t in tables)
    print(f"{k:2d}   {row}    {gaussian_moment(k):6.0f}")
