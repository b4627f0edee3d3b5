"""Beatty sequences, characteristic functions and successor relations.

For an irrational slope ``alpha > 1`` the Beatty sequence is ``a_n = [alpha n]``.
For ``0 < theta < 1`` the characteristic function is
``f_theta(n) = [theta (n+1)] - [theta n]``; it is the indicator of the Beatty
sequence with slope ``1/theta``. Truncated variants (indicators cut off at
some ``x``) are not separate objects here: callers pass explicit cutoffs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .arith import RealSlope, as_slope, as_unit, floor_mul, reciprocal, _check_n


@dataclass(frozen=True)
class BeattySequence:
    """The sequence ``n -> [slope * n]`` for ``n >= 1``."""

    slope: RealSlope
    q: int = field(init=False)

    def __post_init__(self):
        as_slope(self.slope)
        object.__setattr__(self, "q", self.slope.integer_part)

    @property
    def theta(self):
        """Fractional part of the slope."""
        return self.slope.fractional_part

    def term(self, n: int) -> int:
        return floor_mul(self.slope, n)

    def terms(self, start: int, stop: int) -> np.ndarray:
        """Terms for ``start <= n < stop`` as an integer array."""
        if start < 1:
            raise ValueError("Beatty sequences are indexed from 1")
        return kernels.beatty_range(self.slope, start, stop)

    def __getitem__(self, n: int) -> int:
        return self.term(n)

    def contains(self, n: int) -> bool:
        return is_member(self.slope, n)[0] == 1


@dataclass(frozen=True)
class CharacteristicFunction:
    """``f_alpha(n) = [alpha (n+1)] - [alpha n]`` for irrational ``0 < alpha < 1``."""

    alpha: RealSlope

    def __post_init__(self):
        as_unit(self.alpha)

    def __call__(self, n: int) -> int:
        return char_value(self.alpha, n)

    def values(self, start: int, stop: int) -> np.ndarray:
        """``f_alpha(n)`` for ``start <= n < stop``."""
        fl = kernels.floor_mul_array(self.alpha, np.arange(start, stop + 1, dtype=np.int64))
        return np.diff(fl)

    def prefix_count(self, m: int) -> int:
        """``sum_{n <= m} f_alpha(n)``, which telescopes to ``[alpha (m+1)]``."""
        return self.alpha.floor_mul(m + 1)


def beatty_term(alpha: RealSlope, n: int) -> int:
    return floor_mul(as_slope(alpha), n)


def beatty_terms(alpha: RealSlope, count: int) -> np.ndarray:
    """The first ``count`` terms."""
    return kernels.beatty_range(as_slope(alpha), 1, count + 1)


def char_value(alpha: RealSlope, n: int) -> int:
    n = _check_n(n)
    as_unit(alpha)
    return alpha.floor_mul(n + 1) - alpha.floor_mul(n)


def char_values(alpha: RealSlope, start: int, stop: int) -> np.ndarray:
    return CharacteristicFunction(alpha).values(start, stop)


def is_member(alpha: RealSlope, n: int) -> tuple[int, int | None]:
    """Whether ``n = [alpha k]`` for some ``k``, and that ``k`` if so.

    Uses the reciprocal slope: with ``k = [n/alpha] + 1`` the number ``n`` is a
    term exactly when ``[(n+1)/alpha] = k``.
    """
    n = _check_n(n)
    inv = reciprocal(as_slope(alpha))
    k = inv.floor_mul(n) + 1
    if inv.floor_mul(n + 1) == k:
        return 1, k
    return 0, None


def successor_delta(alpha: RealSlope, n: int) -> int:
    """``a_{n+1} - a_n``; always ``[alpha]`` or ``[alpha] + 1``."""
    n = _check_n(n)
    as_slope(alpha)
    return alpha.floor_mul(n + 1) - alpha.floor_mul(n)


def shift_delta(alpha: RealSlope, n: int, k: int) -> int:
    """``a_{n+k} - a_n``."""
    n = _check_n(n)
    k = _check_n(k)
    as_slope(alpha)
    return alpha.floor_mul(n + k) - alpha.floor_mul(n)
