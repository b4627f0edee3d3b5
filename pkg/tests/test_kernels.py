from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from beatty_lab import kernels, oracle
from beatty_lab.accumulate import Approx, frac_sum, quotient_sum
from beatty_lab.arith import PrecisionContext, QuadraticSurd, phi, phi2

surds = st.builds(QuadraticSurd, st.integers(-30, 30), st.integers(1, 9), st.sampled_from([2, 3, 5, 7]),
                  st.integers(1, 6))


@given(surds, st.integers(1, 10**6))
def test_floor_array_matches_scalar(x, start):
    ns = np.arange(start, start + 50, dtype=np.int64)
    assert kernels.floor_mul_array(x, ns).tolist() == [x.floor_mul(int(n)) for n in ns]


def test_floor_array_large_values_fall_back():
    x = QuadraticSurd(10**7, 3, 7)
    ns = np.array([10**12, 10**12 + 1])
    out = kernels.floor_mul_array(x, ns)
    assert out.dtype == object
    assert list(out) == [x.floor_mul(10**12), x.floor_mul(10**12 + 1)]


def test_isqrt_array_exact():
    t = np.array([0, 1, 15, 16, 17, 2**61 - 1, (2**30 + 3) ** 2, (2**30 + 3) ** 2 - 1], dtype=np.int64)
    import math
    assert kernels.isqrt_array(t).tolist() == [math.isqrt(int(v)) for v in t]


def test_beatty_range():
    assert kernels.beatty_range(phi(), 1, 9).tolist() == [1, 3, 4, 6, 8, 9, 11, 12]


@given(st.lists(st.integers(1, 10**6), min_size=1, max_size=40),
       st.lists(st.integers(1, 10**9), min_size=40, max_size=40))
def test_quotient_sum_fixed_bounds(nums, dens):
    dens = dens[: len(nums)]
    K = 80
    acc = kernels.quotient_sum_fixed(np.array(nums, dtype=np.int64), np.array(dens, dtype=np.int64), K)
    exact = sum(Fraction(n, d) for n, d in zip(nums, dens)) * 2**K
    assert acc <= exact < acc + len(nums)


@pytest.mark.parametrize("digits", [12, 22, 40])
def test_quotient_sum_error_bound(digits):
    ctx = PrecisionContext(digits)
    nums = np.arange(1, 2001, dtype=np.int64)
    dens = 3 * nums + 1
    a = quotient_sum(nums, dens, ctx)
    exact = sum(Fraction(int(n), int(d)) for n, d in zip(nums, dens))
    assert abs(a.value - exact) <= a.err
    assert a.err < Fraction(1, 10**digits)


@pytest.mark.parametrize("digits", [12, 22])
def test_frac_sum_routes_certified(digits):
    ctx = PrecisionContext(digits)
    alpha = phi().reciprocal()
    ms = np.arange(2, 502, dtype=np.int64)
    dens = (ms - 1) * ms
    got = frac_sum(alpha, ms, dens, ctx)
    exact_surd = sum(((alpha * int(m) - alpha.floor_mul(int(m))) * Fraction(1, int(d)) for m, d in zip(ms, dens)), Fraction(0))
    lo, hi = exact_surd.interval(40)
    assert got.value - got.err <= hi and lo <= got.value + got.err


def test_frac_float_flags_nothing_silently():
    fr, eps = kernels.frac_float(phi2(), np.arange(1, 10**5, dtype=np.int64))
    assert (fr > 0).all() and (fr < 1).all() and (eps < 1e-9).all()


def test_approx_arithmetic():
    x = Approx(Fraction(1, 3), Fraction(1, 100))
    y = x * 2 - Fraction(1, 3)
    assert y.value == Fraction(1, 3) and y.err == Fraction(2, 100)
    d, bound = Approx(Fraction(1, 3)).to_decimal(10)
    assert abs(Fraction(d) - Fraction(1, 3)) <= bound


def test_deterministic_bitwise():
    ctx = PrecisionContext(22)
    ms = np.arange(2, 20002, dtype=np.int64)
    runs = {frac_sum(phi2().reciprocal(), ms, ms * (ms - 1), ctx).value for _ in range(3)}
    assert len(runs) == 1


def test_oracle_independent_floor_sample():
    for n in (1, 10, 999_999, 10**6):
        assert kernels.floor_mul_array(phi2(), np.array([n]))[0] == oracle.oracle_floor(phi2(), n)
