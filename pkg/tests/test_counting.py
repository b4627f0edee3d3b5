from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from beatty_lab import counting, oracle
from beatty_lab.arith import phi, phi2, random_surd_pairs
from beatty_lab.errors import InvalidSlope

C, D = phi().reciprocal(), phi2().reciprocal()
units = st.sampled_from([a.reciprocal() for pair in random_surd_pairs(40, seed=3) for a in pair])


@pytest.mark.parametrize("fn, args, expect", [
    (counting.count_members, (D, 18), 7),
    (counting.count_members, (C, 21), 13),
    (counting.count_members, (C, 2), 1),
    (counting.count_cross, (C, D, 8), 2),
    (counting.count_cross, (C, D, 21), 5),
    (counting.count_cross_shifted, (C, D, 1, 21), 5),
    (counting.count_cross_shifted, (C, D, 3, 100), 24),
])
def test_frozen_counts(fn, args, expect):
    # expected values come from mpmath enumeration of the sequences
    res = fn(*args)
    assert res.closed_form == res.brute_force == expect


def test_frozen_indicator_sums():
    assert counting.shifted_indicator_sum(D, 13, 2) == 5
    assert counting.shifted_indicator_sum(C, 100, 5) == 62


def test_indicator_against_oracle_members():
    B = set(oracle.oracle_members(phi2(), 300))
    for upper, k in [(10, 0), (57, 3), (200, 11)]:
        assert counting.shifted_indicator_sum(D, upper, k) == sum(n + k in B for n in range(1, upper + 1))


@given(units, units, st.integers(1, 3000), st.integers(0, 20))
def test_closed_forms_equal_brute_force(c, d, t, k):
    assert counting.count_members(c, t).match
    assert counting.count_cross(c, d, t).match
    assert counting.count_cross_shifted(c, d, k, t).match
    assert counting.shifted_indicator_check(d, t, k).match


@given(units, units, st.integers(1, 2000))
def test_counts_monotone_in_t(c, d, t):
    assert counting.count_members(c, t + 1).closed_form >= counting.count_members(c, t).closed_form
    assert counting.count_cross(c, d, t + 1).closed_form >= counting.count_cross(c, d, t).closed_form


@pytest.mark.parametrize("t", [Fraction(43, 2), 21.9, phi() * 13])
def test_non_integer_cutoff(t):
    # only [t] = 21 matters
    assert counting.count_cross(C, D, t).closed_form == 5
    assert counting.count_members(C, t).closed_form == 13


def test_invalid_inputs():
    with pytest.raises(InvalidSlope):
        counting.count_members(phi(), 10)
    with pytest.raises(ValueError):
        counting.count_members(C, Fraction(1, 2))
    with pytest.raises(ValueError):
        counting.count_cross_shifted(C, D, -1, 10)
    with pytest.raises(ValueError):
        counting.count_members(C, float("inf"))


def test_to_dict():
    d = counting.count_cross(C, D, 21).to_dict()
    assert d["closed_form"] == d["brute_force"] == 5 and d["match"] is True
