"""From d-ascent sequences to d-Fishburn permutations three ways.

Run: python3 demos/03_fishburn_pipeline.py
"""

from itertools import permutations

from fishlab import burge, fishburn, hat

w = (1, 2, 1, 2, 4, 2, 2, 3, 2)
image = hat.hat_d(w, 0)
print("word            ", w)
print("hat_0           ", image)
print("burget of hat   ", burge.burget(image))
print("phi_0 directly  ", fishburn.phi_d(w, 0))
print()

p = (6, 4, 1, 5, 2, 3)
print("permutation     ", p)
print("2-active        ", sorted(fishburn.d_active_elements(p, 2)))
print("active gaps     ", fishburn.active_site_gaps(p, 2))
print("2-Fishburn?     ", fishburn.is_d_fishburn(p, 2))
print()

# three descriptions of the same class: insertion image, active ascent
# bottoms, pattern avoidance
for n in range(7):
    image = {fishburn.phi_d(v, 0) for v in hat.enumerate_d_asc(n, 0)}
    by_sites = sum(
        fishburn.is_d_fishburn(q, 0) for q in permutations(range(1, n + 1))
    )
    by_pattern = sum(
        not fishburn.contains_fishburn_pattern(q, 0)
        for q in permutations(range(1, n + 1))
    )
    print(f"n={n}: image {len(image)}, active-site count {by_sites}, "
          f"pattern count {by_pattern}")
