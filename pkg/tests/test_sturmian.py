from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from beatty_lab import sturmian
from beatty_lab.arith import QuadraticSurd, phi, phi2
from beatty_lab.errors import InvalidSlope
from beatty_lab.sturmian import BinaryWord, SlopePairEqualFrac

GOLDEN = SlopePairEqualFrac(phi(), phi2())


def test_golden_prefix():
    # bit n is 1 iff n is in {1, 3, 4, 6, 8, 9, 11, 12, ...} = Beatty(phi)
    assert str(sturmian.ratio_sign_word(GOLDEN, 13)) == "1011010110110"
    assert str(sturmian.characteristic_word(phi() - 1, 13)) == "1011010110110"
    assert GOLDEN.q == 1 and GOLDEN.r == 2


def test_rewritten_terms_of_main_series():
    h = [sturmian.direct_h(GOLDEN, n) for n in range(1, 6)]
    assert h == [Fraction(1, 2), Fraction(-1, 15), Fraction(1, 14), Fraction(1, 30), Fraction(-3, 104)]


def test_pair_validation():
    with pytest.raises(InvalidSlope):
        SlopePairEqualFrac(phi(), QuadraticSurd(1, 1, 2))
    with pytest.raises(InvalidSlope):
        SlopePairEqualFrac(phi2(), phi())
    with pytest.raises(InvalidSlope):
        SlopePairEqualFrac(phi(), QuadraticSurd(2, 1, 5, 2))  # phi + 1/2
    assert SlopePairEqualFrac.from_shift(phi(), 2).b == phi() + 2
    with pytest.raises(ValueError):
        SlopePairEqualFrac.from_shift(phi(), 0)


surd_bases = st.builds(QuadraticSurd, st.integers(1, 20), st.integers(1, 5), st.sampled_from([2, 3, 5, 7, 11]),
                       st.integers(1, 4)).filter(lambda x: x > 1)


@given(surd_bases, st.integers(1, 6))
def test_sign_word_equals_characteristic(a, t):
    pair = SlopePairEqualFrac.from_shift(a, t)
    chk = sturmian.word_equality_check(pair, 3000)
    assert chk.equal and chk.first_mismatch is None


@given(surd_bases, st.integers(1, 6), st.integers(1, 10**6))
def test_closed_form_h(a, t, n):
    pair = SlopePairEqualFrac.from_shift(a, t)
    assert sturmian.closed_form_h(pair, n) == sturmian.direct_h(pair, n)


def test_word_properties():
    w = sturmian.characteristic_word(phi() - 1, 20_000)
    assert w.is_balanced()
    assert abs(w.density() - float(phi() - 1)) < 1e-3
    assert w.bit(1) == 1 and w.bit(2) == 0


def test_binary_word_basics():
    w = BinaryWord.from_string("10110")
    assert len(w) == 5 and str(w) == "10110"
    assert w == BinaryWord.from_string("10110") and hash(w) == hash(BinaryWord.from_string("10110"))
    assert w.first_mismatch(BinaryWord.from_string("10010")) == 3
    assert w.first_mismatch(BinaryWord.from_string("101")) == 4
    assert not BinaryWord.from_string("1100").is_balanced()
    with pytest.raises(ValueError):
        BinaryWord.from_string("102")
