"""Hat orbits of inversion sequences and the statistics they preserve.

Run: python3 demos/02_orbits_and_statistics.py
"""

from fishlab import hat, sequences as seqs

w = (1, 1, 2, 4, 2)
print("inversion sequence", w, " min d =", seqs.min_d(w))
for d, image in hat.h_orbit(w):
    print(
        f"  d={d}: {image}   asc={seqs.asc_set(image)}"
        f" wdes={seqs.wdes_set(image)} rlmin={seqs.rl_min_pairs(image)}"
    )
print("original stats:       ", seqs.asc_set(w), seqs.wdes_set(w), seqs.rl_min_pairs(w))
print()

# every image in every orbit keeps Asc, wDes and the right-to-left minima
n = 5
bad = 0
for v in seqs.enumerate_inversion(n):
    stats = (seqs.asc_set(v), seqs.wdes_set(v), seqs.rl_min_pairs(v))
    for _, img in hat.h_orbit(v):
        if (seqs.asc_set(img), seqs.wdes_set(img), seqs.rl_min_pairs(img)) != stats:
            bad += 1
print(f"orbit images with changed statistics over I_{n}: {bad}")
print("distinct orbit images:", len(hat.enumerate_modinv(n)))
