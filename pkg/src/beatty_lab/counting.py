"""Closed-form counts of Beatty members and cross members, with brute force.

Every function returns both the closed form and a direct count so that the
identity itself is what gets checked. The cutoff ``t`` may be any real number
at least 1; only ``[t]`` matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Rational

import numpy as np

from . import kernels
from .arith import as_unit, is_real


@dataclass(frozen=True)
class CountResult:
    closed_form: int
    brute_force: int
    t: object
    params: dict = field(default_factory=dict)

    @property
    def match(self) -> bool:
        return self.closed_form == self.brute_force

    def to_dict(self) -> dict:
        return {
            "closed_form": self.closed_form,
            "brute_force": self.brute_force,
            "t": str(self.t),
            "params": {k: str(v) for k, v in self.params.items()},
            "match": self.match,
        }


def _floor_t(t) -> int:
    if isinstance(t, Rational):
        T = math.floor(t)
    elif is_real(t):
        T = t.integer_part
    elif isinstance(t, float):
        if not math.isfinite(t):
            raise ValueError("cutoff must be finite")
        T = math.floor(t)
    else:
        raise TypeError(f"unsupported cutoff type {type(t).__name__}")
    if T < 1:
        raise ValueError(f"cutoff must be at least 1, got {t}")
    return T


def _chi(alpha, upto: int) -> np.ndarray:
    """``chi[n] = f_alpha(n)`` for ``0 <= n <= upto`` (entry 0 unused)."""
    fl = kernels.floor_mul_array(alpha, np.arange(0, upto + 2, dtype=np.int64))
    return np.diff(fl)


def count_members(c, t) -> CountResult:
    """``#{n <= t : f_c(n) = 1}`` against ``[c([t]+1)]``."""
    as_unit(c)
    T = _floor_t(t)
    closed = c.floor_mul(T + 1)
    brute = int(_chi(c, T)[1:].sum())
    return CountResult(closed, brute, t, {"c": c})


def count_cross(c, d, t) -> CountResult:
    """Members ``n`` of the ``1/c`` sequence whose index ``[cn]+1`` is a member
    of the ``1/d`` sequence, against ``[d([c([t]+1)]+1)]``."""
    res = count_cross_shifted(c, d, 0, t)
    return CountResult(res.closed_form, res.brute_force, t, {"c": c, "d": d})


def count_cross_shifted(c, d, k: int, t) -> CountResult:
    """Like :func:`count_cross` with the index shifted by ``k``."""
    as_unit(c)
    as_unit(d)
    if k < 0:
        raise ValueError("k must be nonnegative")
    T = _floor_t(t)
    inner = c.floor_mul(T + 1)
    closed = d.floor_mul(inner + k + 1) - _floor0(d, k + 1)
    ns = np.arange(1, T + 1, dtype=np.int64)
    fc = _chi(c, T)[1:]
    idx = kernels.floor_mul_array(c, ns) + k + 1
    gd = _chi(d, int(idx.max()))
    brute = int((fc * gd[idx]).sum())
    return CountResult(closed, brute, t, {"c": c, "d": d, "k": k})


def shifted_indicator_sum(d, upper: int, k: int) -> int:
    """``sum_{n <= upper} f_d(n + k)`` by the closed form ``[d(upper+k+1)] - [d(k+1)]``."""
    return shifted_indicator_check(d, upper, k).closed_form


def shifted_indicator_check(d, upper: int, k: int) -> CountResult:
    """:func:`shifted_indicator_sum` paired with the direct sum."""
    as_unit(d)
    if upper < 1 or k < 0:
        raise ValueError("need upper >= 1 and k >= 0")
    closed = d.floor_mul(upper + k + 1) - _floor0(d, k + 1)
    brute = int(_chi(d, upper + k)[1 + k:].sum())
    return CountResult(closed, brute, upper, {"d": d, "k": k})


def _floor0(x, n: int) -> int:
    return x.floor_mul(n) if n else 0
