from decimal import Decimal
from fractions import Fraction

import pytest

from beatty_lab import oracle
from beatty_lab.arith import DecimalLiteral, QuadraticSurd, phi, phi2
from beatty_lab.errors import AmbiguousFloor, InvalidSlope

# log(phi) - log(phi^2) = -log(phi), 50 digits
LOG_DIFF = Decimal("-0.48121182505960344749775891342436842313518433438566")


def test_config_validation():
    with pytest.raises(ValueError):
        oracle.OracleConfig(digits=30)
    with pytest.raises(ValueError):
        oracle.OracleConfig(truncation_multiplier=0)


def test_floor_and_members():
    assert oracle.oracle_floor(phi(), 10**6) == 1618033
    assert oracle.oracle_members(QuadraticSurd(1, 1, 2), 12) == [2, 4, 7, 9, 12]


def test_literal_ambiguity_detected():
    lit = DecimalLiteral.parse("1.61803398874989484820")
    assert oracle.oracle_floor(lit, 1000) == 1618
    with pytest.raises(AmbiguousFloor):
        oracle.oracle_floor(lit, 10**25)


def test_log_difference():
    assert oracle.oracle_log_ratio(phi(), phi2()) == LOG_DIFF
    assert abs(oracle.oracle_log(phi()) + LOG_DIFF) < Decimal("1e-49")


def test_theorem3_routes_agree():
    # exact rational route and decimal summation route
    exact = oracle.theorem3_lhs_exact(phi2(), 3, 100)
    dec = oracle.oracle_sum("theorem3_lhs", {"c": phi2(), "k": 3}, 100)
    assert abs(Fraction(dec) - exact) < Fraction(1, 10**50)


def test_unknown_series():
    with pytest.raises(ValueError):
        oracle.oracle_sum("zeta", {}, 10)
    with pytest.raises(InvalidSlope):
        oracle.oracle_floor(1.5, 3)


def test_ratio_small_exact():
    a = [phi().floor_mul(n) for n in range(1, 13)]
    b = [phi2().floor_mul(n) for n in range(1, 13)]
    exact = sum(Fraction(a[n + 1], a[n]) - Fraction(b[n + 1], b[n]) for n in range(10))
    got = oracle.oracle_sum("ratio", {"a": phi(), "b": phi2()}, 10)
    assert abs(Fraction(got) - exact) < Fraction(1, 10**50)
