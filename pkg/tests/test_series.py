from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from fishlab import dyck, fixtures
from fishlab.series import TruncSeries, series_Q, solve_P


def poly(coeffs, order=8):
    return TruncSeries(coeffs, order)


series_strategy = st.lists(
    st.fractions(max_denominator=20), min_size=0, max_size=9
).map(lambda cs: poly(cs))


def test_constructor_pads_and_truncates():
    s = TruncSeries([1, 2, 3, 4], 2)
    assert s.coeffs == (1, 2, 3)
    assert poly([1]).coeffs == (1,) + (0,) * 8
    with pytest.raises(ValueError):
        TruncSeries([1], -1)


def test_arithmetic_basics():
    x = TruncSeries.x(4)
    one = TruncSeries.constant(1, 4)
    assert (one + x).coeffs == (1, 1, 0, 0, 0)
    assert (x * x).coeffs == (0, 0, 1, 0, 0)
    assert (x ** 3).coeffs == (0, 0, 0, 1, 0)
    assert (2 * x - x).coeffs == x.coeffs
    assert (1 - x).coeffs == (1, -1, 0, 0, 0)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        TruncSeries.x(3) + TruncSeries.x(4)


def test_reciprocal_geometric():
    inv = (1 - TruncSeries.x(6)).reciprocal()
    assert inv.coeffs == (1,) * 7
    with pytest.raises(ZeroDivisionError):
        TruncSeries.x(3).reciprocal()


@given(series_strategy)
def test_reciprocal_is_two_sided(s):
    if s.coeffs[0] == 0:
        return
    one = TruncSeries.constant(1, s.order)
    assert s * s.reciprocal() == one
    assert s.reciprocal() * s == one


@given(series_strategy, series_strategy, series_strategy)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


def test_solve_P_satisfies_equation():
    for d in range(5):
        for q in (Fraction(-1), Fraction(0), Fraction(2)):
            p = solve_P(d, q, 10)
            x = TruncSeries.x(10)
            if d == 0:
                rhs = 1 + x * p * p + q * x ** 2 * p * p
            else:
                rhs = 1 + x * p * p + q * x ** (d + 1) * p ** d
            assert p == rhs


def test_q_zero_gives_catalan():
    # with the marker weight at zero the series counts all Dyck paths
    q = series_Q(0, 0, 12)
    assert list(q.coeffs) == fixtures.CATALAN
    q5 = series_Q(5, 0, 12)
    assert list(q5.coeffs) == fixtures.CATALAN


def test_q_minus_one_matches_table():
    # substituting q = -1 sieves out the paths containing the factor
    for d, row in fixtures.TABLE_213.items():
        q = series_Q(d, -1, 12)
        assert [int(c) for c in q.coeffs] == row
        assert all(c.denominator == 1 for c in q.coeffs)


def test_series_against_brute_force_distribution():
    # coefficient of x^n at marker weight q-1 equals sum of q^(factors)
    for d in range(3):
        for qv in (0, 2, 3):
            series = series_Q(d, qv - 1, 8)
            for n in range(9):
                direct = sum(
                    qv ** dyck.count_ddu_factor(p, d)
                    for p in dyck.enumerate_dyck_paths(n)
                )
                assert series.coeffs[n] == direct


def test_solve_P_rejects_negative_d():
    with pytest.raises(ValueError):
        solve_P(-1, 0, 5)
