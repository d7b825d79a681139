"""Dyck paths, the 213-avoider bijection, factor counting and the two
generating trees with their label isomorphism.

Paths are ASCII strings over U and D.
"""

from collections import Counter

from .sequences import contains_word_pattern

PATTERN_213 = (2, 1, 3)


def is_dyck(path: str) -> bool:
    h = 0
    for s in path:
        if s == "U":
            h += 1
        elif s == "D":
            h -= 1
        else:
            return False
        if h < 0:
            return False
    return h == 0


def phi_213(p) -> str:
    """Recursive first-letter decomposition p = p_1 L R -> U phi(L) D phi(R)."""
    if contains_word_pattern(p, PATTERN_213):
        raise ValueError(f"permutation contains 213: {p}")

    def rec(q):
        if not q:
            return ""
        v = q[0]
        left = tuple(x for x in q[1:] if x > v)
        right = tuple(x for x in q[1:] if x < v)
        return "U" + rec(left) + "D" + rec(right)

    return rec(tuple(p))


def count_ddu_factor(path: str, d: int) -> int:
    """Occurrences of the contiguous factor DDU^(d+1), counted window-wise."""
    target = "DD" + "U" * (d + 1)
    k = len(target)
    return sum(path[i : i + k] == target for i in range(len(path) - k + 1))


def enumerate_dyck_paths(n: int):
    """All Dyck paths of semilength n."""
    def grow(path, height, ups):
        if len(path) == 2 * n:
            yield path
            return
        if ups < n:
            yield from grow(path + "U", height + 1, ups + 1)
        if height > 0:
            yield from grow(path + "D", height - 1, ups)

    yield from grow("", 0, 0)


def enumerate_avoiders_213(n: int):
    """All 213-avoiding permutations of [n]: first entry, then the larger
    values, then the smaller ones."""
    def rec(values):
        if not values:
            yield ()
            return
        for i, v in enumerate(values):
            for left in rec(values[i + 1 :]):
                for right in rec(values[:i]):
                    yield (v,) + left + right

    yield from rec(tuple(range(1, n + 1)))


OMEGA_ROOT = (1, 1)
THETA_ROOT = (0, 1)


def omega_children(label):
    a, ell = label
    return [(a, i) for i in range(1, ell)] + [(a + 1, i) for i in range(ell + 1, a + 2)]


def theta_children(label):
    w, u = label
    return [(w + 1, i) for i in range(1, u + 1)] + [(w, i) for i in range(u + 1, w + 2)]


def gen_tree_counts(rule: str, depth: int):
    """Level sizes of the generating tree, computed on label multiplicities."""
    if rule == "Omega":
        level, children = {OMEGA_ROOT: 1}, omega_children
    elif rule == "Theta":
        level, children = {THETA_ROOT: 1}, theta_children
    else:
        raise ValueError(f"unknown rule: {rule}")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    sizes = []
    for _ in range(depth):
        sizes.append(sum(level.values()))
        nxt = Counter()
        for label, mult in level.items():
            for child in children(label):
                nxt[child] += mult
        level = nxt
    return sizes


def tree_iso_map(label, direction: str):
    """The linear bijection between Omega labels (a, l) and Theta labels
    (w, u): w = a - 1, u = a - l + 1."""
    if direction == "omega-to-theta":
        a, ell = label
        if not 1 <= ell <= a:
            raise ValueError(f"invalid Omega label: {label}")
        return (a - 1, a - ell + 1)
    if direction == "theta-to-omega":
        w, u = label
        if not 1 <= u <= w + 1:
            raise ValueError(f"invalid Theta label: {label}")
        return (w + 1, w + 2 - u)
    raise ValueError(f"unknown direction: {direction}")
