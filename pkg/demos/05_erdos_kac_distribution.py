"""Empirical CDF of (omega(n) - ln ln N) / sqrt(ln ln N) against Phi.

Writes plot data to erdos_kac.csv rather than plotting.

Run:  python demos/05_erdos_kac_distribution.py
"""
import numpy as np

from hrlab import PhiSpec, empirical_cdf, ks_distance, normal_cdf, stats_through, window_census

ladder = (10**4, 10**6, 10**8)
stats = stats_through(ladder[-1])

for N in ladder:
    d_fixed = ks_distance(N, "omega", "loglogN", stats=stats)
    d_per_n = ks_distance(N, "omega", "loglog_n", stats=stats)
    d_big = ks_distance(N, "big_omega", "loglogN", stats=stats)
    print(f"N = {N:>9}: KS omega (lnlnN) {d_fixed:.4f}, omega (lnln n) {d_per_n:.4f}, Omega {d_big:.4f}")

# Concentration: fraction of n with |omega(n) - lnlnN| >= kappa * lnlnN
for N in ladder:
    _, frac = window_census(N, "omega", PhiSpec.kappa(0.5), stats=stats)
    print(f"N = {N:>9}: outside kappa=0.5 window: {frac:.4f}")

grid = np.linspace(-3, 3, 61)
ecdf = empirical_cdf(ladder[-1], "omega", "loglogN", grid, stats=stats)
with open("erdos_kac.csv", "w") as fh:
    fh.write("k,empirical,normal\n")
    for k, e in zip(grid, ecdf.cdf_values):
        fh.write(f"{k!r},{e!r},{normal_cdf(k)!r}\n")
print("wrote erdos_kac.csv")
