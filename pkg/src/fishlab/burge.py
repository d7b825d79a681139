"""Two-row Burge tableaux, the Burge transpose, and the burget map."""

from .sequences import is_cayley, wdes_set


def check_tableau(top, bottom) -> None:
    if len(top) != len(bottom):
        raise ValueError("rows differ in length")
    if any(top[i] > top[i + 1] for i in range(len(top) - 1)):
        raise ValueError("top row is not weakly increasing")
    if not is_cayley(top) or not is_cayley(bottom):
        raise ValueError("rows must be Cayley permutations")
    if not set(wdes_set(top)) <= set(wdes_set(bottom)):
        raise ValueError("weak descents of top must be weak descents of bottom")


def burge_transpose(top, bottom):
    """Flip every column, then sort columns by top entry, ties by bottom
    entry weakly decreasing.  An involution on valid tableaux."""
    check_tableau(top, bottom)
    cols = sorted(zip(bottom, top), key=lambda c: (c[0], -c[1]))
    new_top = tuple(c[0] for c in cols)
    new_bottom = tuple(c[1] for c in cols)
    return new_top, new_bottom


def burget(c) -> tuple:
    """Bottom row of the transpose of (identity; c); a permutation of [n].

    On permutations this is the group inverse.
    """
    if not is_cayley(c):
        raise ValueError(f"not a Cayley permutation: {c}")
    identity = tuple(range(1, len(c) + 1))
    _, bottom = burge_transpose(identity, c)
    return bottom
