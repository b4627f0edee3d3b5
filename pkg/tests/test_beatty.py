import numpy as np
import pytest
from hypothesis import given, strategies as st

from beatty_lab import beatty, oracle
from beatty_lab.arith import QuadraticSurd, phi, phi2, random_surd_pairs
from beatty_lab.errors import InvalidSlope

slopes = st.sampled_from([a for pair in random_surd_pairs(30, seed=7) for a in pair] + [phi(), phi2()])


def test_first_terms():
    assert beatty.beatty_terms(phi(), 8).tolist() == [1, 3, 4, 6, 8, 9, 11, 12]
    assert beatty.beatty_terms(QuadraticSurd(1, 1, 2), 5).tolist() == [2, 4, 7, 9, 12]
    s = beatty.BeattySequence(phi2())
    assert s[4] == 10 and s.q == 2 and s.theta == phi() - 1


def test_slope_validation():
    with pytest.raises(InvalidSlope):
        beatty.BeattySequence(phi().reciprocal())
    with pytest.raises(InvalidSlope):
        beatty.CharacteristicFunction(phi())
    with pytest.raises(ValueError):
        beatty.beatty_term(phi(), 0)


@given(slopes, st.integers(1, 10**6))
def test_membership_matches_enumeration(alpha, n):
    member, k = beatty.is_member(alpha, n)
    if member:
        assert alpha.floor_mul(k) == n
    else:
        # n falls strictly between consecutive terms
        j = alpha.reciprocal().floor_mul(n)
        assert alpha.floor_mul(j) < n < alpha.floor_mul(j + 1)


def test_membership_small_vs_oracle():
    for alpha in (phi(), phi2(), QuadraticSurd(1, 1, 3)):
        members = set(oracle.oracle_members(alpha, 500))
        assert {n for n in range(1, 501) if beatty.is_member(alpha, n)[0]} == members


@given(slopes, st.integers(1, 10**7))
def test_successor_delta_is_q_plus_char(alpha, n):
    theta = alpha.fractional_part
    assert beatty.successor_delta(alpha, n) == alpha.integer_part + beatty.char_value(theta, n)


@given(slopes, st.integers(1, 10**7), st.integers(1, 50))
def test_shift_delta(alpha, n, k):
    theta = alpha.fractional_part
    expect = k * alpha.integer_part + theta.floor_mul(n + k) - theta.floor_mul(n)
    assert beatty.shift_delta(alpha, n, k) == expect


@given(slopes, st.integers(1, 5000))
def test_char_function_is_reciprocal_indicator(alpha, n):
    # f_{1/alpha}(n) = 1 exactly when n is a term of alpha
    assert beatty.char_value(alpha.reciprocal(), n) == beatty.is_member(alpha, n)[0]


def test_char_values_and_prefix_count():
    f = beatty.CharacteristicFunction(phi().reciprocal())
    vals = f.values(1, 1001)
    assert vals.tolist()[:8] == [1, 0, 1, 1, 0, 1, 0, 1]
    assert int(vals.sum()) == f.prefix_count(1000)
    assert set(np.unique(vals).tolist()) == {0, 1}


def test_rayleigh_other_pairs():
    a = QuadraticSurd(0, 1, 2)  # sqrt2, complement 2 + sqrt2
    b = (1 - a.reciprocal()).reciprocal()
    assert b == QuadraticSurd(2, 1, 2)
    n = 5000
    A = beatty.beatty_terms(a, n).tolist()
    B = beatty.beatty_terms(b, n).tolist()
    assert sorted(x for x in A + B if x <= n) == list(range(1, n + 1))
