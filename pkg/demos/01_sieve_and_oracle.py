"""Sieving omega(n) and Omega(n), checked against brute force.

Run:  python demos/01_sieve_and_oracle.py [N]
"""
import sys
import time

import numpy as np

from hrlab import factor_small, sieve_range
from hrlab.cachefile import read_stats, write_stats

N = int(float(sys.argv[1])) if len(sys.argv) > 1 else 10**7

# One integer at a time, the oracle is plain trial division.
fm = factor_small(9699690)
print("9699690 =", " * ".join(f"{p}^{e}" for p, e in fm))

# The sieve does a whole range at once. Each integer gets two bytes.
t = time.perf_counter()
stats = sieve_range(1, N)
print(f"sieved [1, {N}] in {time.perf_counter() - t:.2f}s")

# Spot-check a window far from the start against the oracle.
lo = N - 500
window = stats.omega[lo - 1 : lo + 499]
brute = np.array([len(factor_small(n)) for n in range(lo, lo + 500)])
print("window agrees with trial division:", bool(np.array_equal(window, brute)))

# Distribution of omega over the range
counts = stats.value_counts("omega", 1, N)
for v, c in enumerate(counts):
    if c:
        print(f"  omega = {v:2d}: {c}")

# The on-disk cache round-trips exactly.
path = write_stats("demo_stats.bin", sieve_range(1, 10**5))
print("cache round trip ok:", read_stats(path) == sieve_range(1, 10**5))
path.unlink()
