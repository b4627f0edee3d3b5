"""Acceptance criteria, each at its stated tolerance.

Every test carries ``@pytest.mark.criterion(n)``; the conftest prints one
PASS/FAIL line per criterion at the end of the run. Cases that cannot be met
are strict xfails with the reason spelled out, so they turn red if they ever
start passing.
"""

import math
import time
from decimal import Decimal

import numpy as np
import pytest

from beatty_lab import counting, oracle, reproduce, series, sturmian
from beatty_lab.arith import QuadraticSurd, phi, phi2, random_surd_pairs
from beatty_lab.kernels import floor_mul_array

SQRT2_1 = QuadraticSurd(1, 1, 2)  # 1 + sqrt 2


def _check_published(name, m):
    printed = reproduce.PUBLISHED[name][m]
    got = reproduce.computed_partial_sums(name)[m]
    assert abs(got - Decimal(printed)) <= reproduce.tolerance(printed), (printed, got)


# -- criteria 1-3: published partial sums ------------------------------------


@pytest.mark.criterion(1)
@pytest.mark.parametrize("m", sorted(reproduce.INVERTED))
def test_c1_inverted_partial_sums(m):
    _check_published("inverted", m)


MISPRINT = ("printed value is the true partial sum with one decimal digit dropped "
            "(kernel and direct-summation oracle agree)")


@pytest.mark.criterion(2)
@pytest.mark.parametrize("m", [
    pytest.param(m, marks=pytest.mark.xfail(strict=True, reason=MISPRINT)) if m in (10, 50) else m
    for m in sorted(reproduce.DIVERGENT)
])
def test_c2_divergent_partial_sums(m):
    _check_published("divergent", m)


@pytest.mark.criterion(2)
@pytest.mark.parametrize("m, pos", [(10, 1), (50, 6)])
def test_c2_misprints_are_dropped_digits(m, pos, finding):
    got = reproduce.computed_partial_sums("divergent")[m]
    ref = oracle.oracle_sum("ratio", {"a": phi(), "b": phi2(), "num_off": 0, "den_off_a": 1, "den_off_b": 2}, m)
    assert abs(ref - got) < Decimal("1e-18")
    assert reproduce.dropped_digit_match(reproduce.DIVERGENT[m], got) == pos
    finding(f"s_{m}: printed {reproduce.DIVERGENT[m]}, computed {got:.12f} (decimal digit {pos} dropped)")


@pytest.mark.criterion(3)
@pytest.mark.parametrize("m", sorted(reproduce.MAIN_S))
def test_c3_main_series(m):
    _check_published("S", m)


# -- criterion 4: counting lemmas --------------------------------------------

CUTOFFS = (10, 10**2, 10**3, 10**4)


@pytest.mark.criterion(4)
def test_c4_counting_closed_forms():
    pairs = random_surd_pairs(200)
    mismatches = []
    for a, b in pairs:
        c, d = a.reciprocal(), b.reciprocal()
        for t in CUTOFFS:
            checks = [
                counting.count_members(c, t),
                counting.count_cross(c, d, t),
                counting.count_cross_shifted(c, d, 3, t),
                counting.shifted_indicator_check(d, t, 2),
            ]
            mismatches += [(c, d, t, r) for r in checks if not r.match]
    assert mismatches == []


@pytest.mark.criterion(4)
def test_c4_five_count_instance():
    res = counting.count_cross(phi().reciprocal(), phi2().reciprocal(), 21)
    assert res.closed_form == res.brute_force == 5


# -- criterion 5: Rayleigh ----------------------------------------------------


@pytest.mark.criterion(5)
def test_c5_rayleigh_partition():
    n = 10**4
    A = floor_mul_array(phi(), np.arange(1, n + 1))
    B = floor_mul_array(phi2(), np.arange(1, n + 1))
    hits = np.bincount(np.concatenate([A[A <= n], B[B <= n]]), minlength=n + 1)
    assert (hits[1:] == 1).all()


# -- criterion 6: golden decomposition ----------------------------------------


@pytest.mark.criterion(6)
def test_c6_golden_decomposition_exact():
    bad = [m for m in range(1, 201) if not series.golden_decomposition_check(m).extra["exact_equal"]]
    assert bad == []


# -- criterion 7: harmonic-sum decay -----------------------------------------

T3_MS = (1000, 2000, 4000, 8000)
T3_UNMET = ("residual(m)/residual(2m) is not a clean factor 2 here: the O(1/m) constant oscillates "
            "with the shift and individual residuals dip toward zero")


def _t3_case(c, k):
    return pytest.param(c, k, marks=pytest.mark.xfail(strict=True, reason=T3_UNMET)) \
        if (c, k) in ((phi(), 0), (phi(), 3)) else (c, k)


T3_CASES = [_t3_case(c, k) for c in (phi(), phi2(), SQRT2_1) for k in (0, 1, 3)]


@pytest.fixture(scope="module")
def t3_residuals():
    cache = {}

    def get(c, k):
        if (c, k) not in cache:
            reps = series.theorem3_residuals(c, k, T3_MS, N=10**7)
            cache[c, k] = [r.residual for r in reps]
        return cache[c, k]
    return get


@pytest.mark.criterion(7)
@pytest.mark.parametrize("c, k", T3_CASES)
def test_c7_theorem3_decay_ratio(c, k, t3_residuals, finding):
    res = t3_residuals(c, k)
    ratios = [res[i] / res[i + 1] for i in range(3)]
    mean = sum(ratios) / 3
    finding(f"c={c}, k={k}: mean residual(m)/residual(2m) = {mean:.3f}")
    assert Decimal("1.5") <= mean <= Decimal("2.8")


@pytest.mark.criterion(7)
@pytest.mark.parametrize("c, k", [(c, k) for c in (phi(), phi2(), SQRT2_1) for k in (0, 1, 3)])
def test_c7_theorem3_envelope(c, k, t3_residuals):
    # the decay the ratio test is after: m * residual stays bounded
    for m, r in zip(T3_MS, t3_residuals(c, k)):
        assert m * r < 1


# -- criterion 8: shifted ratio identity -------------------------------------

T2_PAIRS = [(phi(), phi2()), (SQRT2_1, QuadraticSurd(2, 1, 3)), (SQRT2_1, QuadraticSurd(1, 1, 3))]


@pytest.mark.criterion(8)
@pytest.mark.slow
@pytest.mark.parametrize("a, b", T2_PAIRS)
@pytest.mark.parametrize("k", [1, 2, 5])
def test_c8_theorem2(a, b, k, finding):
    rep = series.identity_residual(a, b, k, 10**6, 10**6, compare_conventions=True)
    finding(f"({a}, {b}), k={k}: residual {rep.residual} <= {rep.tolerance} "
            f"[j=1..k convention; j=0..k-1 gives {rep.extra['residual_shifted']}]")
    assert rep.convention == "printed"
    assert rep.passed


# -- criterion 9: main theorem limit ------------------------------------------

MONOTONE_UNMET = ("deviation rises from k=2^11 to 2^12 (3.9e-5 -> 5.9e-5); unchanged with C=4, "
                  "so it is the oscillating Weyl-average term, not truncation")


@pytest.fixture(scope="module")
def limit_points():
    target = oracle.oracle_log_ratio(phi(), phi2())
    ks = [2**i for i in range(4, 13)]
    return series.main_theorem_limit(phi(), phi2(), ks, C=16, N=10**6, target=target)


@pytest.mark.criterion(9)
@pytest.mark.slow
def test_c9_factor_four(limit_points, finding):
    devs = [p.deviation for p in limit_points]
    finding("deviations k=2^4..2^12: " + ", ".join(f"{d:.2e}" for d in devs))
    assert devs[-1] < devs[0] / 4


@pytest.mark.criterion(9)
@pytest.mark.slow
@pytest.mark.xfail(strict=True, reason=MONOTONE_UNMET)
def test_c9_eventually_monotone(limit_points):
    # "eventually": non-increasing over the last three schedule points
    devs = [p.deviation for p in limit_points][-3:]
    assert all(x >= y for x, y in zip(devs, devs[1:]))


# -- criterion 10: words ------------------------------------------------------

WORD_PAIRS = [(phi(), phi2()), (SQRT2_1, QuadraticSurd(2, 1, 2)), (QuadraticSurd(1, 1, 3), QuadraticSurd(4, 1, 3))]


@pytest.mark.criterion(10)
@pytest.mark.parametrize("a, b", WORD_PAIRS)
def test_c10_word_equality(a, b):
    pair = sturmian.SlopePairEqualFrac(a, b)
    chk = sturmian.word_equality_check(pair, 10**5)
    assert chk.equal, chk.first_mismatch
    assert all(sturmian.closed_form_h(pair, n) == sturmian.direct_h(pair, n) for n in range(1, 10**4 + 1))


# -- criterion 11: conjecture scan -------------------------------------------


@pytest.mark.criterion(11)
@pytest.mark.slow
def test_c11_conjecture_scan(finding):
    records = series.conjecture_scan(random_surd_pairs(100), N=10**6)
    assert len(records) == 100
    for r in records:
        assert math.isfinite(r.deviation + r.tail_bound)
    viol = [r for r in records if r.violation_1]
    worst = max(records, key=lambda r: r.deviation)
    finding(f"{len(viol)} certified violations of the bound 1; "
            f"{sum(not r.bound_pi2_6 for r in records)} not certified below pi^2/6; "
            f"largest deviation {worst.deviation} at a={worst.a}, b={worst.b}")
    for r in viol:
        finding(f"violation: a={r.a}, b={r.b}, deviation {r.deviation}")


# -- criterion 12: floors vs oracle -------------------------------------------


@pytest.mark.criterion(12)
def test_c12_floor_vs_oracle():
    rng = np.random.default_rng(12)
    slopes = [a for pair in random_surd_pairs(50, seed=120) for a in pair]
    slopes += [s.reciprocal() for s in slopes[:20]] + [phi(), phi2(), -phi()]
    start = time.perf_counter()
    bad = []
    for _ in range(10**4):
        alpha = slopes[int(rng.integers(len(slopes)))]
        n = int(rng.integers(1, 10**6 + 1))
        if alpha.floor_mul(n) != oracle.oracle_floor(alpha, n):
            bad.append((alpha, n))
    assert bad == []
    assert time.perf_counter() - start < 30
