import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fishlab import burge, fixtures, hat
from fishlab import sequences as seqs


def random_cayley(rng, n):
    if n == 0:
        return ()
    while True:
        k = rng.randint(1, n)
        word = tuple(rng.randint(1, k) for _ in range(n))
        if seqs.is_cayley(word):
            return word


def cayley_words(max_n=7):
    return st.integers(0, max_n).flatmap(
        lambda n: st.randoms(use_true_random=False).map(
            lambda rng: random_cayley(rng, n)
        )
    )


def test_check_tableau():
    burge.check_tableau((1, 1, 2, 3, 3), (2, 1, 3, 3, 1))
    burge.check_tableau((), ())
    # top row must be weakly increasing
    with pytest.raises(ValueError):
        burge.check_tableau((2, 1), (1, 1))
    # weak descents of the top must sit under weak descents of the bottom
    with pytest.raises(ValueError):
        burge.check_tableau((1, 1), (1, 2))
    with pytest.raises(ValueError):
        burge.check_tableau((1,), ())


def test_transpose_example():
    top, bottom = burge.burge_transpose((1, 1, 2, 3, 3), (2, 1, 3, 3, 1))
    burge.check_tableau(top, bottom)
    assert sorted(zip(top, bottom)) == sorted(
        zip((2, 1, 3, 3, 1), (1, 1, 2, 3, 3))
    )


def test_transpose_involution_exhaustive():
    for n in range(6):
        for bottom in seqs.enumerate_cayley(n):
            t = (tuple(range(1, n + 1)), bottom)
            assert burge.burge_transpose(*burge.burge_transpose(*t)) == t


@given(cayley_words())
def test_transpose_involution_random(word):
    t = (tuple(range(1, len(word) + 1)), word)
    once = burge.burge_transpose(*t)
    burge.check_tableau(*once)
    assert burge.burge_transpose(*once) == t


def test_burget_example():
    word, image = fixtures.BURGET_EXAMPLE
    assert burge.burget(word) == image


def test_burget_rejects_non_cayley():
    with pytest.raises(ValueError):
        burge.burget((1, 3))


def test_burget_inverts_permutations():
    for n in range(7):
        for p in permutations(range(1, n + 1)):
            inv = tuple(sorted(range(1, n + 1), key=lambda i: p[i - 1]))
            assert burge.burget(p) == inv


def test_burget_is_permutation_valued():
    # transposing (id; c) carries the identity row into the bottom row
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(0, 8)
        word = random_cayley(rng, n)
        image = burge.burget(word)
        assert sorted(image) == list(range(1, n + 1))


def test_burget_injective_on_modified_families():
    for d in range(3):
        for n in range(7):
            dom = hat.enumerate_mod_d_asc(n, d)
            assert len({burge.burget(w) for w in dom}) == len(dom)
