from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from grmeasure.grcore import GRMeasure, format_measure, measure_compare, measure_to_rational
from oracles import rational_to_set, set_to_rational

subsets = st.sets(st.integers(1, 40), max_size=12)


def test_compare_examples():
    assert measure_compare({1}, {1}) == 0
    assert measure_compare({1}, {2, 3}) == 1
    assert measure_compare({1}, {1, 5}) == -1
    assert measure_compare(set(), {7}) == -1


def test_rational_examples():
    assert measure_to_rational(set()) == 0
    assert measure_to_rational({1}) == Fraction(1, 2)
    assert measure_to_rational({1, 3}) == Fraction(5, 8)
    assert measure_to_rational({1, 3, 5}) == Fraction(21, 32)


def test_format():
    assert format_measure(GRMeasure([1, 3, 5])) == "{1,3,5} = 21/32"
    assert format_measure(GRMeasure()) == "{} = 0"
    assert format_measure(GRMeasure([1])) == "{1} = 1/2"


def test_parse_and_errors():
    assert GRMeasure.parse("{1, 3,5}") == GRMeasure([1, 3, 5])
    assert GRMeasure.parse("{}") == GRMeasure()
    with pytest.raises(ValueError):
        GRMeasure.parse("{1,a}")
    with pytest.raises(ValueError):
        GRMeasure([0, 2])


def test_prefix_operations():
    mu = GRMeasure([1, 2, 4])
    assert mu.starts_with(GRMeasure([1, 2]))
    assert not mu.starts_with(GRMeasure([1, 3]))
    assert mu.truncate(3) == GRMeasure([1, 2])
    assert mu.with_top(6) == GRMeasure([1, 2, 4, 6])
    assert mu.without_top() == GRMeasure([1, 2])
    with pytest.raises(ValueError):
        mu.with_top(4)


@given(subsets, subsets)
def test_compare_matches_rationals(I, J):
    q = measure_to_rational(I) - measure_to_rational(J)
    assert measure_compare(I, J) == (q > 0) - (q < 0)


@given(subsets, subsets, subsets)
def test_order_is_transitive(I, J, L):
    A, B, C = sorted([GRMeasure(I), GRMeasure(J), GRMeasure(L)])
    assert A <= B <= C and A <= C


@given(subsets)
def test_rational_round_trip(I):
    assert rational_to_set(measure_to_rational(I)) == sorted(I)
    assert set_to_rational(I) == measure_to_rational(I)


@given(subsets, st.integers(41, 60))
def test_extension_is_larger(I, n):
    mu = GRMeasure(I)
    assert mu < mu.with_top(n)
