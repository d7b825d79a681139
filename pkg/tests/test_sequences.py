from itertools import combinations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fishlab import sequences as seqs


def words(max_n=6):
    return st.integers(0, max_n).flatmap(
        lambda n: st.tuples(*(st.integers(1, n) for _ in range(n)))
    )


def all_words(n):
    return product(range(1, n + 1), repeat=n)


def test_asc_set_examples():
    assert seqs.asc_set((1, 2, 1, 2, 4, 2, 2, 3, 2)) == (1, 2, 4, 5, 8)
    assert seqs.asc_set((1,)) == (1,)
    assert seqs.asc_set((3, 2, 1)) == (1,)
    assert seqs.asc_set(()) == ()


def test_d_asc_set_examples():
    assert seqs.d_asc_set((1, 2, 1, 3, 1, 5, 3, 2), 2) == (1, 2, 3, 4, 6, 8)
    assert seqs.d_asc_set((1, 1), 1) == (1, 2)


def test_d_asc_set_agrees_with_asc_at_d0():
    for n in range(7):
        for w in all_words(n):
            assert seqs.d_asc_set(w, 0) == seqs.asc_set(w)


@given(words(), st.integers(0, 4))
def test_d_asc_monotone_in_d(w, d):
    assert set(seqs.d_asc_set(w, d)) <= set(seqs.d_asc_set(w, d + 1))


def test_wdes_examples():
    assert seqs.wdes_set((1, 2, 1, 2, 4, 2, 2, 3, 2)) == (3, 6, 7, 9)
    assert seqs.wdes_set((1, 1)) == (2,)
    assert seqs.wdes_set((1, 2)) == ()


@given(words())
def test_asc_wdes_partition(w):
    n = len(w)
    a, d = set(seqs.asc_set(w)), set(seqs.wdes_set(w))
    assert a | d == set(range(1, n + 1))
    assert not a & d


def test_nub_examples():
    assert seqs.nub((1, 4, 1, 2, 5, 2, 2, 3, 2)) == (1, 2, 4, 5, 8)
    assert seqs.nub((1, 1, 1)) == (1,)
    assert seqs.nub((1, 2, 3)) == (1, 2, 3)


def test_rl_min_pairs_examples():
    assert seqs.rl_min_pairs((1, 2, 1, 2, 4, 2, 2, 3, 2)) == ((3, 1), (9, 2))
    assert seqs.rl_min_pairs((1, 2, 3)) == ((1, 1), (2, 2), (3, 3))
    assert seqs.rl_min_pairs(()) == ()


def _rl_min_pairs_oracle(w):
    return tuple(
        (i, w[i - 1])
        for i in range(1, len(w) + 1)
        if all(w[i - 1] < w[j] for j in range(i, len(w)))
    )


@given(words())
def test_rl_min_pairs_against_oracle(w):
    assert seqs.rl_min_pairs(w) == _rl_min_pairs_oracle(w)


@given(words())
def test_rl_min_pairs_peeling(w):
    # peeling off the last letter keeps the pairs strictly below it
    if not w:
        return
    prefix_pairs = [
        p for p in seqs.rl_min_pairs(w[:-1]) if p[1] < w[-1]
    ]
    assert seqs.rl_min_pairs(w) == tuple(prefix_pairs) + ((len(w), w[-1]),)


def test_is_cayley_examples():
    assert not seqs.is_cayley((1, 2, 1, 2, 4))
    assert seqs.is_cayley((1, 3, 1, 2))
    assert sum(seqs.is_cayley(w) for w in all_words(3)) == 13


def test_is_inversion_examples():
    assert sum(seqs.is_inversion(w) for w in all_words(3)) == 6
    assert not seqs.is_inversion((1, 3, 1, 2))
    assert seqs.is_inversion((1, 2, 3))


def test_is_d_ascent_seq_examples():
    found = {w for w in all_words(3) if seqs.is_d_ascent_seq(w, 0)}
    assert found == {(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2), (1, 2, 3)}
    assert not seqs.is_d_ascent_seq((1, 1, 3), 0)
    assert seqs.is_d_ascent_seq((1, 1, 3), 1)


def test_small_inversion_sequences_are_d_ascent():
    for d in range(4):
        for n in range(d + 3):
            assert all(
                seqs.is_d_ascent_seq(w, d) for w in seqs.enumerate_inversion(n)
            )


def test_inversion_is_union_of_d_ascent_families():
    for n in range(8):
        inv = set(seqs.enumerate_inversion(n))
        union = {
            w for w in all_words(n)
            if any(seqs.is_d_ascent_seq(w, d) for d in range(n + 1))
        }
        assert inv == union


def test_is_weak_descent_seq_examples():
    assert seqs.is_weak_descent_seq((1, 1))
    assert not seqs.is_weak_descent_seq((1, 2))
    assert seqs.is_weak_descent_seq((1,))


def test_min_d_examples():
    assert seqs.min_d((1, 1, 3)) == 1
    assert seqs.min_d((1, 2, 1, 2, 4, 2, 2, 3, 2)) == 0
    assert seqs.min_d((1,)) == 0
    with pytest.raises(ValueError):
        seqs.min_d((2, 1))


def test_min_d_bounded_by_length():
    for n in range(7):
        assert all(seqs.min_d(w) <= n for w in seqs.enumerate_inversion(n))


def _contains_oracle(w, p):
    # independent re-derivation: match value comparisons pairwise
    for sub in combinations(range(len(w)), len(p)):
        if all(
            (w[sub[i]] < w[sub[j]]) == (p[i] < p[j])
            and (w[sub[i]] == w[sub[j]]) == (p[i] == p[j])
            for i in range(len(p))
            for j in range(i + 1, len(p))
        ):
            return True
    return False


def test_contains_word_pattern_examples():
    assert not seqs.contains_word_pattern((1, 2, 3), (1, 1, 2))
    assert seqs.contains_word_pattern((1, 3, 1, 2), (1, 1, 2))
    assert not seqs.contains_word_pattern((1, 3, 2, 2), (1, 1, 2))
    assert seqs.contains_word_pattern((6, 4, 1, 5, 2, 3), (2, 1, 3))
    assert seqs.contains_word_pattern((5, 1), (1,))
    with pytest.raises(ValueError):
        seqs.contains_word_pattern((1,), ())


@given(words(5), words(3).filter(bool))
def test_contains_word_pattern_against_oracle(w, p):
    assert seqs.contains_word_pattern(w, p) == _contains_oracle(w, p)


def test_flat_steps_examples():
    assert seqs.flat_steps((1, 2, 2, 4, 3, 1, 5)) == (2,)
    assert seqs.flat_steps((1, 1, 1)) == (1, 2)
    assert seqs.flat_steps((1, 2, 3)) == ()


def test_enumerate_cayley_counts():
    # Fubini numbers
    for n, count in enumerate([1, 1, 3, 13, 75, 541]):
        found = seqs.enumerate_cayley(n)
        assert len(found) == count
        assert all(seqs.is_cayley(w) for w in found)
        assert found == sorted(set(found))
