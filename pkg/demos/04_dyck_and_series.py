"""Dyck paths, factor counting, generating trees and the exact series.

Run: python3 demos/04_dyck_and_series.py
"""

from fishlab import dyck
from fishlab.series import series_Q

p = (3, 5, 4, 1, 2)
path = dyck.phi_213(p)
print("213-avoider ", p)
print("its path    ", path)
print("DDU factors ", dyck.count_ddu_factor(path, 0))
print()

# the two succession rules generate the same level sizes
print("Omega levels", dyck.gen_tree_counts("Omega", 8))
print("Theta levels", dyck.gen_tree_counts("Theta", 8))
print()

# exact rational series: the q = -1 specialization sieves out the paths
# containing a DDU^(d+1) factor
for d in range(4):
    coeffs = series_Q(d, -1, 10).coeffs
    print(f"d={d}:", [int(c) for c in coeffs])

# cross-check one entry by brute force
d, n = 2, 7
direct = sum(
    dyck.count_ddu_factor(q, d) == 0 for q in dyck.enumerate_dyck_paths(n)
)
print(f"\nbrute force d={d} n={n}: {direct} "
      f"(series {int(series_Q(d, -1, n).coeffs[n])})")
