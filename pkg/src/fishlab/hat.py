"""The modification operator, the d-hat and max-hat maps, and their inverse.

hat_d folds the modification step over the d-ascent list of the input,
computed once up front; intermediate words generally have different
d-ascent sets, so the list must not be recomputed mid-fold.
"""

from .sequences import (
    d_asc_set,
    enumerate_inversion,
    is_d_ascent_seq,
    is_inversion,
    min_d,
    nub,
)


def modify(w, j: int) -> tuple:
    """Increment every entry strictly left of position j that is >= a_j."""
    if not 1 <= j <= len(w):
        raise ValueError(f"position {j} out of range for word of length {len(w)}")
    aj = w[j - 1]
    return tuple(a + 1 if i < j and a >= aj else a for i, a in enumerate(w, 1))


def hat_d(w, d: int) -> tuple:
    """Fold modify over the d-ascent list of w, left to right."""
    if not is_d_ascent_seq(w, d):
        raise ValueError(f"not a {d}-ascent sequence: {w}")
    out = tuple(w)
    for j in d_asc_set(w, d):
        out = modify(out, j)
    return out


def hat_max(w) -> tuple:
    """hat_{n-1} of a length-n inversion sequence; a permutation of [n]."""
    if not is_inversion(w):
        raise ValueError(f"not an inversion sequence: {w}")
    # every position is an (n-1)-ascent, so the fold visits all of them
    out = tuple(w)
    for j in range(1, len(w) + 1):
        out = modify(out, j)
    return out


def hat_inv(g) -> tuple:
    """The unique inversion sequence whose hat orbit contains g.

    Peels the last letter: when position n holds a leftmost copy the
    prefix entries above g_n are shifted back down first.
    """
    out = []
    cur = tuple(g)
    while cur:
        gn = cur[-1]
        delta = cur[:-1]
        if len(cur) in nub(cur):
            delta = tuple(c - 1 if c > gn else c for c in delta)
        out.append(gn)
        cur = delta
    result = tuple(reversed(out))
    if not is_inversion(result):
        raise ValueError(f"{tuple(g)} is not a modified inversion sequence")
    return result


def h_orbit(w):
    """All distinct hats of an inversion sequence, as pairs (least d, image).

    The orbit runs over d from min_d(w) to len(w) and stabilizes from
    d = len(w) - 1 on.
    """
    if not is_inversion(w):
        raise ValueError(f"not an inversion sequence: {w}")
    seen = {}
    for d in range(min_d(w), len(w) + 1):
        image = hat_d(w, d)
        if image not in seen:
            seen[image] = d
    return tuple((d, image) for image, d in seen.items())


def enumerate_d_asc(n: int, d: int):
    """All d-ascent sequences of length n, in lexicographic order."""
    def grow(prefix, dasc):
        if len(prefix) == n:
            yield prefix
            return
        for a in range(1, dasc + 2):
            is_dasc = not prefix or a > prefix[-1] - d
            yield from grow(prefix + (a,), dasc + (1 if is_dasc else 0))

    yield from grow((), 0)


def enumerate_mod_d_asc(n: int, d: int):
    """All modified d-ascent sequences of length n, in lexicographic order.

    Grown by the recursive description: append a <= b - d directly, or
    append b - d < a <= 1 + max after lifting the entries >= a.  The
    d-ascent sequences themselves are never consulted.
    """
    if n == 0:
        return [()]
    level = [(1,)]
    for _ in range(n - 1):
        nxt = []
        for h in level:
            b, m = h[-1], max(h)
            for a in range(1, b - d + 1):
                nxt.append(h + (a,))
            for a in range(max(b - d + 1, 1), m + 2):
                nxt.append(tuple(c + 1 if c >= a else c for c in h) + (a,))
        level = nxt
    return sorted(level)


def enumerate_weak_descent(n: int):
    """All weak descent sequences of length n, in lexicographic order."""
    def grow(prefix, wdes):
        if len(prefix) == n:
            yield prefix
            return
        for a in range(1, wdes + 2):
            is_wdes = bool(prefix) and a <= prefix[-1]
            yield from grow(prefix + (a,), wdes + (1 if is_wdes else 0))

    yield from grow((), 0)


def enumerate_modinv(n: int):
    """All modified inversion sequences of length n: the union of all orbits."""
    out = set()
    for w in enumerate_inversion(n):
        for _, image in h_orbit(w):
            out.add(image)
    return sorted(out)
