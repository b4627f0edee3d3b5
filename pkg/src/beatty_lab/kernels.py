"""Vectorized exact kernels: floors and fractional parts over arrays of n.

Floating point is only ever used to *propose* a candidate; every floor that
leaves this module has been confirmed in integer arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from .arith import DecimalLiteral, QuadraticSurd
from .errors import InvalidSlope, PrecisionExhausted

CHUNK = 1 << 20
_INT64_SAFE = 1 << 62
_U = 2.0**-53


def _to_array(values: list[int]) -> np.ndarray:
    if not values:
        return np.zeros(0, dtype=np.int64)
    if max(values) < _INT64_SAFE and min(values) > -_INT64_SAFE:
        return np.array(values, dtype=np.int64)
    return np.array(values, dtype=object)


def isqrt_array(t2: np.ndarray) -> np.ndarray:
    """Elementwise ``math.isqrt`` for nonnegative int64 values below 2**62."""
    s = np.sqrt(t2.astype(np.float64)).astype(np.int64)
    for _ in range(8):
        over = s * s > t2
        under = (s + 1) * (s + 1) <= t2
        if not (over.any() or under.any()):
            return s
        s = s - over + under
    raise AssertionError("integer square root correction did not converge")


def floor_mul_array(alpha, ns) -> np.ndarray:
    """``[alpha * n]`` for every ``n`` in ``ns``.

    Returns int64 when every value fits, an object array of Python ints
    otherwise.
    """
    ns = np.asarray(ns)
    if ns.dtype == object:
        return _to_array([alpha.floor_mul(int(n)) for n in ns.tolist()])
    ns = ns.astype(np.int64, copy=False)
    if ns.size == 0:
        return np.zeros(0, dtype=np.int64)
    if isinstance(alpha, QuadraticSurd):
        return _surd_floor_array(alpha, ns)
    if isinstance(alpha, DecimalLiteral):
        return _to_array([alpha.floor_mul(n) for n in ns.tolist()])
    raise InvalidSlope(f"unsupported real type {type(alpha).__name__}")


def _surd_floor_array(x: QuadraticSurd, ns: np.ndarray) -> np.ndarray:
    nmax = int(np.abs(ns).max())
    aq = abs(x.q)
    if (aq * nmax) ** 2 * x.d >= _INT64_SAFE or (abs(x.p) * nmax + aq * nmax * 4) * 2 >= _INT64_SAFE:
        return _to_array([x.floor_mul(n) for n in ns.tolist()])
    t = aq * np.abs(ns)
    s = isqrt_array(t * t * x.d)
    sign = np.sign(ns) * (1 if x.q > 0 else -1)
    # floor(q*n*sqrt d): isqrt when positive, -(isqrt+1) when negative, 0 at n=0
    s = np.where(sign > 0, s, np.where(sign < 0, -s - 1, 0))
    return (x.p * ns + s) // x.r


def beatty_range(alpha, start: int, stop: int) -> np.ndarray:
    """``[alpha * n]`` for ``start <= n < stop``."""
    return floor_mul_array(alpha, np.arange(start, stop, dtype=np.int64))


# -- fractional parts --------------------------------------------------------


def _scaled_bounds(alpha, K: int) -> tuple[int, int]:
    """Integers lo <= alpha * 2**K <= hi (lo == hi - 1 for surds)."""
    if isinstance(alpha, QuadraticSurd):
        lo = alpha.floor_mul(1 << K)
        return lo, lo + 1
    if isinstance(alpha, DecimalLiteral):
        a, b = alpha.interval()
        return math.floor(a * (1 << K)), math.ceil(b * (1 << K))
    raise InvalidSlope(f"unsupported real type {type(alpha).__name__}")


def frac_weighted_fixed(alpha, ms: list[int], dens: list[int], K: int) -> tuple[int, int]:
    """Fixed-point ``sum_i {m_i * alpha} / den_i`` in units of ``2**-K``.

    Returns ``(acc, err)``: the true sum lies in ``[acc*2**-K, (acc + err)*2**-K]``
    up to the per-term floor, which only lowers ``acc``; ``err`` already
    includes one unit per term for that.
    """
    lo, hi = _scaled_bounds(alpha, K)
    spread = hi - lo
    one = 1 << K
    mask = one - 1
    acc = 0
    err = 0.0
    exact = isinstance(alpha, QuadraticSurd)
    for m, den in zip(ms, dens):
        v = (m * lo) & mask
        w = m * spread
        if v + w > mask:
            if not exact:
                raise PrecisionExhausted(f"fractional part of {alpha}*{m} is not certified at 2^-{K}")
            v = alpha.floor_mul(m << K) & mask
            w = 1
        acc += v // den
        err += w / den
    return acc, math.ceil(err * (1 + 1e-9)) + 2 * len(ms)


def _theta_float(alpha) -> tuple[float, float]:
    """A float near ``alpha`` and an upper bound on the distance."""
    lo, hi = alpha.interval(40) if isinstance(alpha, QuadraticSurd) else alpha.interval()
    f = float((lo + hi) / 2)
    err = max(abs(lo - Fraction(f)), abs(hi - Fraction(f)))
    return f, float(err) * (1 + 1e-12) + 1e-300


def frac_float(alpha, ms: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Float64 ``{m * alpha}`` with a certified absolute error per entry.

    Entries whose float image lies within its error bound of 0 or 1 are
    recomputed exactly, so the floor implied by every value is correct.
    """
    ms = np.asarray(ms, dtype=np.int64)
    theta, theta_err = _theta_float(alpha)
    mf = ms.astype(np.float64)
    x = mf * theta
    fr = x - np.floor(x)
    eps = (np.abs(mf) * theta_err + np.abs(x) * _U) * (1 + 1e-9) + 1e-300
    ambiguous = np.nonzero((fr <= eps) | (fr >= 1 - eps))[0]
    if ambiguous.size:
        K = 64
        for i in ambiguous.tolist():
            acc, err = frac_weighted_fixed(alpha, [int(ms[i])], [1], K)
            fr[i] = acc / 2.0**K
            eps[i] = (err + 1) / 2.0**K + _U
    return fr, eps


# -- exact rational sums -----------------------------------------------------


def quotient_sum_fixed(nums: np.ndarray, dens: np.ndarray, K: int) -> int:
    """``sum_i floor(nums_i * 2**K / dens_i)`` exactly, vectorized.

    The quotient of each term is produced limb by limb (long division in
    base ``2**B``) so every intermediate stays inside int64. Each term is
    low by less than one unit, so the true scaled sum lies in
    ``[acc, acc + len(nums))``.
    """
    nums = np.asarray(nums)
    dens = np.asarray(dens)
    if nums.size == 0:
        return 0
    if nums.dtype == object or dens.dtype == object:
        return sum((int(x) << K) // int(y) for x, y in zip(nums.tolist(), dens.tolist()))
    B = min(62 - int(dens.max()).bit_length(), 62 - nums.size.bit_length())
    if B < 8:
        return sum((int(x) << K) // int(y) for x, y in zip(nums.tolist(), dens.tolist()))
    q, rem = np.divmod(nums, dens)
    acc = _exact_sum(q) << K
    shift = K
    while shift > 0:
        b = min(B, shift)
        shift -= b
        digit, rem = np.divmod(rem << b, dens)
        acc += int(digit.sum(dtype=np.int64)) << shift
    return acc


def _exact_sum(x: np.ndarray) -> int:
    if x.size and int(np.abs(x).max()) < (1 << 62) // x.size:
        return int(x.sum(dtype=np.int64))
    return sum(x.tolist())
