"""Sturmian words from signs of Beatty ratio differences.

For slopes ``1 < a < b`` sharing the fractional part ``theta``, the sign of

    h(n) = a_{n+1}/a_n - b_{n+1}/b_n

is positive exactly when ``n`` lies in the Beatty sequence of ``1/theta``.
So the word ``f(n) = [h(n) > 0]`` coincides with the characteristic word
``g(n) = [theta(n+1)] - [theta n]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .arith import QuadraticSurd, as_slope, as_unit, compare, _check_n
from .errors import InvalidSlope


@dataclass(frozen=True, eq=False)
class BinaryWord:
    """A finite 0/1 word, indexed from 1 in :meth:`bit`."""

    bits: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.bits, dtype=np.uint8)
        if b.ndim != 1 or (b.size and b.max() > 1):
            raise ValueError("a binary word is a 1-d sequence over {0, 1}")
        object.__setattr__(self, "bits", b)

    @classmethod
    def from_string(cls, s: str) -> "BinaryWord":
        if set(s) - {"0", "1"}:
            raise ValueError("binary words only contain 0 and 1")
        return cls(np.frombuffer(s.encode(), dtype=np.uint8) - ord("0"))

    def __len__(self) -> int:
        return int(self.bits.size)

    def __str__(self) -> str:
        return (self.bits + ord("0")).tobytes().decode()

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryWord) and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash(self.bits.tobytes())

    def bit(self, n: int) -> int:
        return int(self.bits[_check_n(n) - 1])

    def density(self) -> float:
        return float(self.bits.mean()) if len(self) else 0.0

    def first_mismatch(self, other: "BinaryWord") -> int | None:
        """1-based index of the first differing letter (or of the shorter end)."""
        L = min(len(self), len(other))
        diff = np.nonzero(self.bits[:L] != other.bits[:L])[0]
        if diff.size:
            return int(diff[0]) + 1
        return None if len(self) == len(other) else L + 1

    def is_balanced(self, max_factor: int = 20) -> bool:
        """Factors of equal length up to ``max_factor`` differ in weight by at most 1."""
        c = np.concatenate([[0], np.cumsum(self.bits, dtype=np.int64)])
        for ell in range(1, min(max_factor, len(self)) + 1):
            w = c[ell:] - c[:-ell]
            if w.max() - w.min() > 1:
                return False
        return True


@dataclass(frozen=True)
class SlopePairEqualFrac:
    """Slopes ``1 < a < b`` with ``{a} = {b}``; ``q = [a]``, ``r = [b]``."""

    a: object
    b: object
    q: int = field(init=False)
    r: int = field(init=False)

    def __post_init__(self):
        as_slope(self.a)
        as_slope(self.b)
        if compare(self.a, self.b) >= 0:
            raise InvalidSlope("need a < b")
        try:
            diff = self.b - self.a
        except TypeError:
            raise InvalidSlope(f"{{a}} != {{b}} for a={self.a}, b={self.b}") from None
        if isinstance(diff, QuadraticSurd) or Fraction(diff).denominator != 1:
            if isinstance(self.a, QuadraticSurd) and isinstance(self.b, QuadraticSurd):
                raise InvalidSlope(f"{{a}} != {{b}} for a={self.a}, b={self.b}")
            # literals: the difference must be certified within 1e-20 of an integer
            lo, hi = diff.interval()
            t = round((lo + hi) / 2)
            if not (lo > t - Fraction(1, 10**20) and hi < t + Fraction(1, 10**20)):
                raise InvalidSlope("cannot certify equal fractional parts")
        object.__setattr__(self, "q", self.a.integer_part)
        object.__setattr__(self, "r", self.b.integer_part)

    @classmethod
    def from_shift(cls, a, t: int) -> "SlopePairEqualFrac":
        """The pair ``(a, a + t)`` for an integer ``t >= 1``."""
        if int(t) != t or t < 1:
            raise ValueError("t must be a positive integer")
        return cls(a, a + int(t))

    @property
    def theta(self):
        return self.a.fractional_part


def _beatty(alpha, L: int) -> np.ndarray:
    return kernels.floor_mul_array(alpha, np.arange(1, L + 2, dtype=np.int64))


def ratio_sign_word(pair: SlopePairEqualFrac, L: int) -> BinaryWord:
    """Bit ``n`` is 1 iff ``a_{n+1}/a_n > b_{n+1}/b_n``, decided on integers."""
    L = _check_n(L)
    A = _beatty(pair.a, L)
    B = _beatty(pair.b, L)
    if A.dtype == object or B.dtype == object or int(B[-1]) >= 1 << 31:
        A = A.astype(object)
        B = B.astype(object)
    lhs = A[1:] * B[:-1]
    rhs = B[1:] * A[:-1]
    return BinaryWord((lhs > rhs).astype(np.uint8))


def characteristic_word(theta, L: int) -> BinaryWord:
    """``g(n) = [theta(n+1)] - [theta n]`` for ``n = 1..L``."""
    L = _check_n(L)
    as_unit(theta)
    fl = kernels.floor_mul_array(theta, np.arange(1, L + 2, dtype=np.int64))
    return BinaryWord(np.diff(fl).astype(np.uint8))


def direct_h(pair: SlopePairEqualFrac, n: int) -> Fraction:
    n = _check_n(n)
    a, b = pair.a, pair.b
    return Fraction(a.floor_mul(n + 1), a.floor_mul(n)) - Fraction(b.floor_mul(n + 1), b.floor_mul(n))


def closed_form_h(pair: SlopePairEqualFrac, n: int) -> Fraction:
    """``(n g(n) - [theta n]) (r - q) / (a_n b_n)``."""
    n = _check_n(n)
    theta = pair.theta
    tn = theta.floor_mul(n)
    g = theta.floor_mul(n + 1) - tn
    return Fraction((n * g - tn) * (pair.r - pair.q), pair.a.floor_mul(n) * pair.b.floor_mul(n))


@dataclass(frozen=True)
class WordCheck:
    equal: bool
    first_mismatch: int | None
    length: int


def word_equality_check(pair: SlopePairEqualFrac, L: int) -> WordCheck:
    f = ratio_sign_word(pair, L)
    g = characteristic_word(pair.theta, L)
    mm = f.first_mismatch(g)
    return WordCheck(mm is None, mm, L)
