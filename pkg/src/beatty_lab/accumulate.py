"""Certified accumulation: exact rational centers with explicit error radii.

Every summation kernel in the package reduces to one of two routes:

* fixed point, where each term is an integer multiple of ``2**-K`` and the
  running sum is a Python int (exact, so order cannot matter);
* float64 terms combined with ``math.fsum`` (correctly rounded, so again the
  result does not depend on summation order), plus an a-priori bound on the
  per-term rounding.

Both return an :class:`Approx`, whose arithmetic is exact on the center and
adds radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational

import numpy as np

from . import arith, kernels
from .arith import PrecisionContext

_U = 2.0**-53
_SAFE = 1 + 1e-6


def _bits_for(digits: int) -> int:
    return math.ceil(digits * math.log2(10))


@dataclass(frozen=True)
class Approx:
    """A real known to lie within ``err`` of the rational ``value``."""

    value: Fraction
    err: Fraction = Fraction(0)

    def __add__(self, other):
        other = _lift(other)
        return Approx(self.value + other.value, self.err + other.err)

    __radd__ = __add__

    def __neg__(self):
        return Approx(-self.value, self.err)

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        v = self.value * other.value
        e = abs(self.value) * other.err + abs(other.value) * self.err + self.err * other.err
        return Approx(v, e)

    __rmul__ = __mul__

    def to_decimal(self, digits: int) -> tuple[Decimal, Fraction]:
        """Round the center to ``digits`` significant digits.

        Returns the decimal and the total error bound including that rounding.
        """
        with localcontext() as c:
            c.prec = digits
            d = Decimal(self.value.numerator) / Decimal(self.value.denominator)
        return d, self.err + abs(Fraction(d) - self.value)


def _lift(x) -> Approx:
    if isinstance(x, Approx):
        return x
    if isinstance(x, Rational):
        return Approx(Fraction(x))
    raise TypeError(f"cannot combine Approx with {type(x).__name__}")


def real(x, digits: int) -> Approx:
    """Enclose a surd, literal or rational to about ``digits`` places."""
    if isinstance(x, Rational):
        return Approx(Fraction(x))
    lo, hi = x.interval(digits)
    return Approx((lo + hi) / 2, (hi - lo) / 2)


def log(x, digits: int) -> Approx:
    """Natural logarithm with absolute error below ``10**-digits``."""
    return Approx(Fraction(arith.ln(x, digits)), Fraction(1, 10**digits))


def decimal_const(d: Decimal) -> Approx:
    """A tabulated constant, trusted to one unit in its last place."""
    t = d.as_tuple()
    return Approx(Fraction(d), Fraction(1, 10 ** (-t.exponent)))


def _float_err(x: float) -> Fraction:
    return Fraction(float(x) * _SAFE)


def quotient_sum(nums: np.ndarray, dens: np.ndarray, ctx: PrecisionContext) -> Approx:
    """Exact-to-``2**-K`` value of ``sum nums_i / dens_i`` (integer arrays)."""
    n = int(np.asarray(nums).size)
    K = _bits_for(ctx.working_digits + 4) + n.bit_length()
    acc = kernels.quotient_sum_fixed(nums, dens, K)
    # each term is truncated toward -inf by less than one unit
    scale = Fraction(1, 1 << K)
    return Approx((acc * 2 + n) * scale / 2, n * scale / 2)


def frac_sum(alpha, ms: np.ndarray, dens: np.ndarray, ctx: PrecisionContext) -> Approx:
    """``sum_i {m_i * alpha} / dens_i`` for positive integer arrays ``ms``, ``dens``."""
    ms = np.asarray(ms, dtype=np.int64)
    dens = np.asarray(dens, dtype=np.int64)
    if ms.size == 0:
        return Approx(Fraction(0))
    if ctx.use_float:
        return _frac_sum_float(alpha, ms, dens)
    return _frac_sum_fixed(alpha, ms, dens, ctx)


def _frac_sum_float(alpha, ms: np.ndarray, dens: np.ndarray) -> Approx:
    fr, eps = kernels.frac_float(alpha, ms)
    df = dens.astype(np.float64)
    terms = fr / df
    s = math.fsum(terms)
    # per-term: enclosure of the fraction, the division, and a possibly inexact
    # float image of a very large denominator; then the final fsum rounding
    den_exact = bool(dens.max() < (1 << 53))
    per_term = eps / df + terms * (_U if den_exact else 2 * _U)
    err = math.fsum(per_term) * _SAFE + abs(s) * _U
    return Approx(Fraction(s), _float_err(err))


def _frac_sum_fixed(alpha, ms: np.ndarray, dens: np.ndarray, ctx: PrecisionContext) -> Approx:
    n = ms.size
    mmax = int(ms.max())
    K = _bits_for(ctx.working_digits + 4) + n.bit_length() + mmax.bit_length() + 4
    acc, err_units = kernels.frac_weighted_fixed(alpha, ms.tolist(), dens.tolist(), K)
    scale = Fraction(1, 1 << K)
    return Approx((2 * acc + err_units) * scale / 2, err_units * scale / 2)


def chunks(start: int, stop: int, size: int = kernels.CHUNK):
    """Consecutive ``(lo, hi)`` index windows covering ``[start, stop)``."""
    lo = start
    while lo < stop:
        hi = min(lo + size, stop)
        yield lo, hi
        lo = hi
