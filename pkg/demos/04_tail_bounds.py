"""Chebyshev vs higher-moment vs Gaussian tail bounds, and measured tails.

Run:  python demos/04_tail_bounds.py
"""
from hrlab import bounds_table, higher_moment_bound, optimal_even_r, gaussian_tail_bound

print("published comparison rows (flag = printed value disagrees with formula)")
for row in bounds_table():
    flag = "  <- flag" if row.discrepancy else ""
    print(f"  r={row.r} A={row.A:4g}  chebyshev={row.chebyshev:<8g} bound={row.higher_moment:<12.6g} printed={row.paper_value}{flag}")

# More moments help until r passes A^2 + 1.
A = 5.0
print(f"\nA = {A}:")
for r in range(2, 40, 4):
    print(f"  r={r:2d}  {higher_moment_bound(A, r):.3e}")
r = optimal_even_r(A)
print(f"  best r = {r}: {higher_moment_bound(A, r):.3e}; sqrt(2) exp(-A^2/2) = {gaussian_tail_bound(A):.3e}")

# Measured tail frequencies of omega at N = 10^7 under each bound.
print("\nmeasured tails at N = 10^7")
for row in bounds_table([1.0, 1.5, 2.0, 2.5], [2, 2, 4, 6], 10**7):
    print(f"  A={row.A}: empirical={row.empirical:.3e} chebyshev={row.chebyshev:.3e} r={row.r} bound={row.higher_moment:.3e}")
