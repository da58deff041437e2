"""pi_nu, omega-bar_nu, squarefree counts and Mertens sums.

Run:  python demos/02_counting_functions.py [N]
"""
import math
import sys

from hrlab import landau_ratio, mertens_sums, omega_bar_nu, pi_nu, prime_power_count, q_count, stats_through

N = int(float(sys.argv[1])) if len(sys.argv) > 1 else 10**7
stats = stats_through(N)

# The small worked example: 6, 10, 14, 15 are the squarefree n <= 20
# with exactly two prime factors.
print("pi_2(20) =", pi_nu(20, 2))

print(f"\nN = {N}")
print(" nu   pi_nu   omega_bar_nu   Landau ratio")
for nu in range(1, 8):
    p, w = pi_nu(N, nu, stats=stats), omega_bar_nu(N, nu, stats=stats)
    print(f"{nu:3d} {p:9d} {w:12d}   {landau_ratio(N, nu, stats=stats):.4f}")

q = q_count(N, stats=stats)
print(f"\nQ(N)/N = {q / N:.7f}   6/pi^2 = {6 / math.pi**2:.7f}")
print("omega_bar_1(N) == number of prime powers:", omega_bar_nu(N, 1, stats=stats) == prime_power_count(N))

for M in (10**3, 10**5, N):
    m = mertens_sums(M)
    print(f"sum_(p<={M}) 1/p - ln ln {M} = {m.offset_estimate:.6f}")
