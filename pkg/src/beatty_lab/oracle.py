"""Slow, independent reference computations.

Nothing here calls the integer kernels. Floors come from big-float
evaluation (mpmath or :mod:`decimal`) with an explicit ambiguity check, and
sums are plain ascending loops at high precision, so agreement with the main
kernels is evidence rather than tautology.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, localcontext, ROUND_FLOOR
from fractions import Fraction

import mpmath

from .arith import DecimalLiteral, QuadraticSurd
from .errors import AmbiguousFloor, InvalidSlope


@dataclass(frozen=True)
class OracleConfig:
    digits: int = 60
    truncation_multiplier: int = 4

    def __post_init__(self):
        if self.digits < 60:
            raise ValueError("oracle precision must be at least 60 digits")
        if self.truncation_multiplier < 1:
            raise ValueError("truncation_multiplier must be positive")


DEFAULT = OracleConfig()


# -- mpmath route -------------------------------------------------------------


def _mp(x):
    if isinstance(x, QuadraticSurd):
        return (mpmath.mpf(x.p) + x.q * mpmath.sqrt(x.d)) / x.r
    if isinstance(x, DecimalLiteral):
        return mpmath.mpf(x.center.numerator) / x.center.denominator
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return mpmath.mpf(x.numerator) / x.denominator
    raise InvalidSlope(f"unsupported real type {type(x).__name__}")


def oracle_floor(alpha, n: int, config: OracleConfig = DEFAULT) -> int:
    """``[alpha n]`` from a ``config.digits`` evaluation.

    Raises :class:`AmbiguousFloor` when the value sits too close to an integer
    to be settled at this precision.
    """
    with mpmath.workdps(config.digits):
        x = _mp(alpha) * n
        f = int(mpmath.floor(x))
        margin = mpmath.mpf(10) ** (-(config.digits - 10)) * max(1, abs(x))
        if x - f < margin or f + 1 - x < margin:
            raise AmbiguousFloor(f"{alpha}*{n} is within {mpmath.nstr(margin, 3)} of an integer")
        if isinstance(alpha, DecimalLiteral):
            rad = mpmath.mpf(alpha.radius.numerator) / alpha.radius.denominator * n
            if x - rad < f or x + rad >= f + 1:
                raise AmbiguousFloor(f"literal {alpha} cannot settle the floor at n={n}")
        return f


def oracle_log(x, digits: int = 50) -> Decimal:
    """Natural log of a positive real, rounded to ``digits`` significant digits."""
    with mpmath.workdps(digits + 15):
        v = mpmath.log(_mp(x))
        return Decimal(mpmath.nstr(v, digits, strip_zeros=False))


def oracle_log_ratio(a, b, digits: int = 50) -> Decimal:
    """``log(a/b)`` to ``digits`` significant digits (subtraction done in mpmath)."""
    with mpmath.workdps(digits + 15):
        v = mpmath.log(_mp(a)) - mpmath.log(_mp(b))
        return Decimal(mpmath.nstr(v, digits, strip_zeros=False))


def oracle_members(alpha, upto: int, config: OracleConfig = DEFAULT) -> list[int]:
    """Terms ``[alpha k] <= upto`` by direct enumeration."""
    out = []
    k = 1
    while True:
        t = oracle_floor(alpha, k, config)
        if t > upto:
            return out
        out.append(t)
        k += 1


# -- decimal route (fast enough for millions of terms) -------------------------


class _Dec:
    """A real evaluated once to ``digits`` significant digits."""

    def __init__(self, x, digits: int):
        self.digits = digits
        with localcontext() as c:
            c.prec = digits + 5
            if isinstance(x, QuadraticSurd):
                self.v = (Decimal(x.p) + Decimal(x.q) * Decimal(x.d).sqrt()) / Decimal(x.r)
            elif isinstance(x, DecimalLiteral):
                self.v = Decimal(x.center.numerator) / Decimal(x.center.denominator)
            else:
                raise InvalidSlope(f"unsupported real type {type(x).__name__}")
        self.tiny = Decimal(10) ** (-(digits - 12))

    def floor_frac(self, n: int) -> tuple[int, Decimal]:
        x = self.v * n
        f = x.to_integral_value(rounding=ROUND_FLOOR)
        fr = x - f
        if fr < self.tiny or fr > 1 - self.tiny:
            raise AmbiguousFloor(f"fractional part of {self.v}*{n} is not settled")
        return int(f), fr


def _fl(y: Decimal, tiny: Decimal) -> int:
    f = y.to_integral_value(rounding=ROUND_FLOOR)
    if y - f < tiny or f + 1 - y < tiny:
        raise AmbiguousFloor(f"{y} is too close to an integer")
    return int(f)


SERIES_IDS = ("ratio", "frac_plain", "frac_shifted", "T", "F", "theorem3_lhs")


def oracle_sum(series_id: str, params: dict, n_terms: int, config: OracleConfig = DEFAULT) -> Decimal:
    """Direct ascending summation of one of :data:`SERIES_IDS`.

    ``params`` holds the slopes (``a``, ``b`` or ``c``) and, where relevant,
    ``num_off``, ``den_off_a``, ``den_off_b`` or ``k``. For ``theorem3_lhs``
    ``n_terms`` plays the role of ``m``.
    """
    P = config.digits
    with localcontext() as ctx:
        ctx.prec = P
        if series_id == "ratio":
            return _ratio(params, n_terms, P)
        if series_id == "frac_plain":
            return _frac_plain(params["c"], n_terms, P)
        if series_id == "frac_shifted":
            return _frac_shifted(params["c"], params.get("k", 0), n_terms, P)
        if series_id == "T":
            a, b = params["a"], params["b"]
            A, B = _Dec(a, P), _Dec(b, P)
            return A.v * _frac_plain(a, n_terms, P) - B.v * _frac_plain(b, n_terms, P)
        if series_id == "F":
            return _F(params["a"], params["b"], n_terms, P)
        if series_id == "theorem3_lhs":
            return _theorem3_lhs(params["c"], params.get("k", 0), n_terms, P)
    raise ValueError(f"unknown series id {series_id!r}; choose from {SERIES_IDS}")


def _ratio(params, m: int, P: int) -> Decimal:
    u = params.get("num_off", 1)
    v = params.get("den_off_a", 0)
    w = params.get("den_off_b", 0)
    A, B = _Dec(params["a"], P), _Dec(params["b"], P)
    top = m + max(u, v, w)
    a = [0] + [A.floor_frac(n)[0] for n in range(1, top + 1)]
    b = [0] + [B.floor_frac(n)[0] for n in range(1, top + 1)]
    s = Decimal(0)
    for n in range(1, m + 1):
        s += Decimal(a[n + u]) / a[n + v] - Decimal(b[n + u]) / b[n + w]
    return s


def _frac_plain(c, N: int, P: int) -> Decimal:
    inv = _Dec(c, P)
    s = Decimal(0)
    for n in range(1, N + 1):
        # {(n+1)/c} with the division done in decimal, not via a reciprocal surd
        x = Decimal(n + 1) / inv.v
        s += (x - _fl(x, inv.tiny)) / (n * (n + 1))
    return s


def _frac_shifted(c, k: int, N: int, P: int) -> Decimal:
    C = _Dec(c, P)
    theta = C.v - C.v.to_integral_value(rounding=ROUND_FLOOR)
    s = Decimal(0)
    for n in range(1, N + 1):
        cp = _fl(Decimal(n + 1) / C.v, C.tiny)
        x = theta * (cp + k + 1)
        s += (x - _fl(x, C.tiny)) / (n * (n + 1))
    return s


def _F(a, b, N: int, P: int) -> Decimal:
    A, B = _Dec(a, P), _Dec(b, P)
    s = Decimal(0)
    for n in range(1, N + 1):
        an, fa = A.floor_frac(n)
        bn, fb = B.floor_frac(n)
        s += (A.v * fb - B.v * fa) / (an * bn)
    return s


def _theorem3_lhs(c, k: int, m: int, P: int) -> Decimal:
    """The harmonic Beatty sum in its original form over all ``n <= [mc]``."""
    C = _Dec(c, P)
    q = int(C.v.to_integral_value(rounding=ROUND_FLOOR))
    theta = C.v - q
    x = C.floor_frac(m)[0]

    def fl(y):
        return _fl(y, C.tiny)

    s = Decimal(0)
    for n in range(1, x + 1):
        f = fl((n + 1) / C.v) - fl(n / C.v)
        if not f:
            continue
        t = fl(n / C.v) + k + 1
        g = fl(theta * (t + 1)) - fl(theta * t)
        s += Decimal(q + g) / n
    return s


def theorem3_lhs_exact(c, k: int, m: int) -> Fraction:
    """Exact rational version of the harmonic Beatty sum (small ``m`` only)."""
    q = oracle_floor(c, 1)
    x = oracle_floor(c, m)
    total = Fraction(0)
    with mpmath.workdps(DEFAULT.digits):
        inv = 1 / _mp(c)
        theta_mp = _mp(c) - q
        for n in range(1, x + 1):
            f = int(mpmath.floor(inv * (n + 1))) - int(mpmath.floor(inv * n))
            if f:
                t = int(mpmath.floor(inv * n)) + k + 1
                g = int(mpmath.floor(theta_mp * (t + 1))) - int(mpmath.floor(theta_mp * t))
                total += Fraction(q + g, n)
    return total
