"""Exact and certified real-number kernels.

Two kinds of real numbers are supported:

* :class:`QuadraticSurd` -- ``(p + q*sqrt(d)) / r`` with integer fields.  Every
  floor is decided in integer arithmetic (``math.isqrt``), so ``[alpha*n]`` is
  exact for every ``n`` no matter how close ``alpha*n`` sits to an integer.
* :class:`DecimalLiteral` -- a value known through a finite number of certified
  decimal digits.  Decisions that the digits cannot settle raise
  :class:`~beatty_lab.errors.PrecisionExhausted` instead of guessing.
"""

from __future__ import annotations

import math
import operator
import os
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import Union

import numpy as np

from .errors import InvalidSlope, PrecisionExhausted

GUARD_DIGITS = 10

# 50 significant digits; OEIS A001620 and A013661.
EULER_GAMMA = Decimal("0.57721566490153286060651209008240243104215933593992")
PI2_OVER_6 = Decimal("1.6449340668482264364724151666460251892189499012068")


def _default_max_digits() -> int:
    return int(os.environ.get("BEATTY_LAB_MAX_DIGITS", "200"))


@dataclass(frozen=True)
class PrecisionContext:
    """Working precision (decimal digits) and the cap for escalation.

    ``working_digits`` already includes the guard digits; build contexts from a
    user-facing target with :meth:`for_target`.
    """

    working_digits: int = 12 + GUARD_DIGITS
    max_digits: int = field(default_factory=_default_max_digits)

    def __post_init__(self):
        if self.working_digits < GUARD_DIGITS:
            raise ValueError(f"working_digits must be at least {GUARD_DIGITS}")
        if self.working_digits > self.max_digits:
            raise PrecisionExhausted(
                f"working precision {self.working_digits} exceeds the cap of {self.max_digits} digits"
            )

    @classmethod
    def for_target(cls, target_digits: int = 12, max_digits: int | None = None) -> "PrecisionContext":
        if target_digits < 0:
            raise ValueError("target_digits must be nonnegative")
        if max_digits is None:
            max_digits = _default_max_digits()
        return cls(target_digits + GUARD_DIGITS, max_digits)

    @property
    def target_digits(self) -> int:
        return self.working_digits - GUARD_DIGITS

    @property
    def use_float(self) -> bool:
        """True when float64 terms with exactly rounded summation are enough."""
        return self.working_digits <= 15

    def escalate(self) -> "PrecisionContext":
        if self.working_digits >= self.max_digits:
            raise PrecisionExhausted(f"precision cap of {self.max_digits} digits reached")
        return PrecisionContext(min(2 * self.working_digits, self.max_digits), self.max_digits)


def _split_square(d: int) -> tuple[int, int]:
    """Return (s, e) with d = s*s*e and e squarefree."""
    s, e = 1, d
    f = 2
    while f * f <= e:
        while e % (f * f) == 0:
            e //= f * f
            s *= f
        f += 1 if f == 2 else 2
    return s, e


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, Rational):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadraticSurd:
    """The irrational number ``(p + q*sqrt(d)) / r``, stored in canonical form.

    Construction normalizes: ``d`` is reduced to its squarefree part, ``r > 0``
    and ``gcd(p, q, r) == 1``.  Equal values therefore have equal fields.
    """

    p: int
    q: int
    d: int
    r: int = 1

    def __post_init__(self):
        p, q, d, r = (operator.index(v) for v in (self.p, self.q, self.d, self.r))
        if r == 0:
            raise InvalidSlope("denominator r must be nonzero")
        if d <= 1:
            raise InvalidSlope(f"radicand must be > 1, got {d}")
        if q == 0:
            raise InvalidSlope("q must be nonzero (the value would be rational)")
        s, d = _split_square(d)
        if d == 1:
            raise InvalidSlope(f"radicand {self.d} is a perfect square (the value would be rational)")
        q *= s
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(math.gcd(p, q), r)
        for name, value in (("p", p // g), ("q", q // g), ("d", d), ("r", r // g)):
            object.__setattr__(self, name, value)

    # -- exact floors -------------------------------------------------------

    def floor_mul(self, n: int) -> int:
        """Return ``[self * n]`` for any integer ``n``."""
        t = self.q * n
        s = math.isqrt(t * t * self.d)
        if t < 0:
            # t*sqrt(d) is irrational, so its floor is -(isqrt + 1)
            s = -s - 1
        return (self.p * n + s) // self.r

    def floor(self) -> int:
        return self.floor_mul(1)

    def sign(self) -> int:
        """Exact sign of the value (never zero)."""
        if self.p >= 0 and self.q > 0:
            return 1
        if self.p <= 0 and self.q < 0:
            return -1
        # opposite signs: compare p^2 with q^2 d
        if self.p * self.p > self.q * self.q * self.d:
            return 1 if self.p > 0 else -1
        return 1 if self.q > 0 else -1

    @property
    def integer_part(self) -> int:
        return self.floor()

    @property
    def fractional_part(self) -> "QuadraticSurd":
        return self - self.floor()

    # -- field arithmetic in Q(sqrt d) ---------------------------------------

    @property
    def _parts(self) -> tuple[Fraction, Fraction]:
        return Fraction(self.p, self.r), Fraction(self.q, self.r)

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                return None
            return other._parts
        if isinstance(other, Rational):
            return Fraction(other), Fraction(0)
        return None

    def _build(self, a: Fraction, b: Fraction):
        if b == 0:
            return a
        den = a.denominator * b.denominator // math.gcd(a.denominator, b.denominator)
        return QuadraticSurd(int(a * den), int(b * den), self.d, den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._parts
        return self._build(a + o[0], b + o[1])

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.q, self.d, self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._parts
        return self._build(a - o[0], b - o[1])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._parts
        c, e = o
        return self._build(a * c + b * e * self.d, a * e + b * c)

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticSurd":
        """``1/x`` via the conjugate; the result is again a surd."""
        norm = self.p * self.p - self.q * self.q * self.d
        return QuadraticSurd(self.r * self.p, -self.r * self.q, self.d, norm)

    def __truediv__(self, other):
        if isinstance(other, QuadraticSurd):
            if other.d != self.d:
                return NotImplemented
            return self * other.reciprocal()
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.reciprocal() * Fraction(other)
        return NotImplemented

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.q, self.d, self.r)

    # -- ordering ------------------------------------------------------------

    def _cmp(self, other) -> int:
        if self._coerce(other) is not None:
            diff = self - other
            return diff.sign() if isinstance(diff, QuadraticSurd) else (diff > 0) - (diff < 0)
        return compare(self, other)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    # -- approximations ------------------------------------------------------

    def to_decimal(self, digits: int) -> Decimal:
        """Value truncated (toward -inf) to ``digits`` places after the point."""
        return Decimal(self.floor_mul(10**digits)).scaleb(-digits)

    def interval(self, digits: int) -> tuple[Fraction, Fraction]:
        f = self.floor_mul(10**digits)
        return Fraction(f, 10**digits), Fraction(f + 1, 10**digits)

    def __float__(self) -> float:
        return float(self.to_decimal(40))

    def spec(self) -> str:
        return f"surd:{self.p},{self.q},{self.d},{self.r}"

    def __str__(self) -> str:
        sign = "+" if self.q > 0 else "-"
        body = f"{self.p}{sign}{abs(self.q)}*sqrt({self.d})"
        return f"({body})/{self.r}" if self.r != 1 else f"({body})"


@dataclass(frozen=True)
class DecimalLiteral:
    """An irrational value known to lie in ``[center - radius, center + radius]``.

    Use :meth:`parse` for user input; it requires at least 20 certified
    significant digits and sets the radius to one unit in the last certified
    place.
    """

    center: Fraction
    radius: Fraction
    certified_digits: int
    digits: str = ""

    MIN_CERTIFIED = 20

    @classmethod
    def parse(cls, digits: str, certified_digits: int | None = None) -> "DecimalLiteral":
        try:
            dec = Decimal(digits.strip())
        except Exception as exc:
            raise InvalidSlope(f"not a decimal literal: {digits!r}") from exc
        if not dec.is_finite() or dec == 0:
            raise InvalidSlope(f"decimal literal must be finite and nonzero: {digits!r}")
        digs = dec.as_tuple().digits
        significant = len(digs) - next(i for i, v in enumerate(digs) if v)
        if certified_digits is None:
            certified_digits = significant
        if certified_digits > significant:
            raise InvalidSlope(f"only {significant} significant digits given, {certified_digits} claimed")
        if certified_digits < cls.MIN_CERTIFIED:
            raise InvalidSlope(
                f"decimal literals need at least {cls.MIN_CERTIFIED} certified digits, got {certified_digits}"
            )
        radius = Fraction(10) ** (dec.adjusted() - certified_digits + 1)
        return cls(Fraction(dec), radius, certified_digits, digits.strip())

    def _bounds(self, n) -> tuple[Fraction, Fraction]:
        lo, hi = n * (self.center - self.radius), n * (self.center + self.radius)
        return (lo, hi) if lo <= hi else (hi, lo)

    def floor_mul(self, n: int) -> int:
        lo, hi = self._bounds(n)
        fl = math.floor(lo)
        if math.floor(hi) != fl:
            raise PrecisionExhausted(
                f"{self.certified_digits} certified digits cannot decide [x*{n}] for x={self.digits or float(self)}"
            )
        return fl

    def floor(self) -> int:
        return self.floor_mul(1)

    def sign(self) -> int:
        if self.center - self.radius > 0:
            return 1
        if self.center + self.radius < 0:
            return -1
        raise PrecisionExhausted("sign of decimal literal is not certified")

    @property
    def integer_part(self) -> int:
        return self.floor()

    @property
    def fractional_part(self) -> "DecimalLiteral":
        return self - self.floor()

    def _with(self, center: Fraction, radius: Fraction, lost: int = 0) -> "DecimalLiteral":
        return DecimalLiteral(center, radius, self.certified_digits - lost)

    def __add__(self, other):
        if isinstance(other, Rational):
            return self._with(self.center + other, self.radius)
        if isinstance(other, DecimalLiteral):
            return DecimalLiteral(
                self.center + other.center,
                self.radius + other.radius,
                min(self.certified_digits, other.certified_digits) - 1,
            )
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._with(-self.center, self.radius)

    def __sub__(self, other):
        if isinstance(other, (Rational, DecimalLiteral)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self._with(self.center * other, self.radius * abs(Fraction(other)))
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "DecimalLiteral":
        c = abs(self.center)
        if c <= self.radius:
            raise PrecisionExhausted("cannot invert a literal whose interval contains zero")
        return self._with(1 / self.center, self.radius / (c * (c - self.radius)), lost=1)

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return self.reciprocal() * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __lt__(self, other):
        return compare(self, other) < 0

    def __gt__(self, other):
        return compare(self, other) > 0

    def __le__(self, other):
        return compare(self, other) <= 0

    def __ge__(self, other):
        return compare(self, other) >= 0

    def to_decimal(self, digits: int) -> Decimal:
        scaled = math.floor(self.center * 10**digits)
        return Decimal(scaled).scaleb(-digits)

    def interval(self, digits: int = 0) -> tuple[Fraction, Fraction]:
        return self.center - self.radius, self.center + self.radius

    def __float__(self) -> float:
        return float(self.center)

    def spec(self) -> str:
        return f"dec:{self.digits}" if self.digits else f"dec:{float(self.center)!r}"

    def __str__(self) -> str:
        return self.digits or f"{float(self.center)!r}+-{float(self.radius):.1e}"


RealSlope = Union[QuadraticSurd, DecimalLiteral]
CertifiedReal = Union[QuadraticSurd, DecimalLiteral, Fraction, int]


def phi() -> QuadraticSurd:
    """The golden ratio (1 + sqrt 5)/2."""
    return QuadraticSurd(1, 1, 5, 2)


def phi2() -> QuadraticSurd:
    """phi squared, (3 + sqrt 5)/2."""
    return QuadraticSurd(3, 1, 5, 2)


def is_real(x) -> bool:
    return isinstance(x, (QuadraticSurd, DecimalLiteral))


def as_slope(x) -> RealSlope:
    """Validate that ``x`` is an irrational slope greater than 1."""
    if not is_real(x):
        raise InvalidSlope(f"slope must be a QuadraticSurd or DecimalLiteral, got {type(x).__name__}")
    if not x > 1:
        raise InvalidSlope(f"slope must exceed 1, got {x}")
    return x


def as_unit(x) -> RealSlope:
    """Validate that ``x`` is an irrational number in (0, 1)."""
    if not is_real(x):
        raise InvalidSlope(f"expected a QuadraticSurd or DecimalLiteral, got {type(x).__name__}")
    if not (x > 0 and x < 1):
        raise InvalidSlope(f"value must lie in (0, 1), got {x}")
    return x


def _check_n(n: int) -> int:
    n = operator.index(n)
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return n


def floor_mul(alpha: RealSlope, n: int) -> int:
    """``[alpha * n]`` for ``n >= 1``."""
    if not is_real(alpha):
        raise InvalidSlope(f"unsupported real type {type(alpha).__name__}")
    return alpha.floor_mul(_check_n(n))


def frac_mul(alpha: RealSlope, n: int, ctx: PrecisionContext | None = None):
    """``{alpha * n}`` as an exact surd, or a certified literal interval.

    For literals the interval width must be below ``10**-working_digits``.
    """
    n = _check_n(n)
    if isinstance(alpha, QuadraticSurd):
        return alpha * n - alpha.floor_mul(n)
    if isinstance(alpha, DecimalLiteral):
        ctx = ctx or PrecisionContext()
        out = alpha * n - alpha.floor_mul(n)
        if 2 * out.radius >= Fraction(1, 10**ctx.working_digits):
            raise PrecisionExhausted(
                f"{{alpha*{n}}} is only known to width {float(2 * out.radius):.1e}, "
                f"need < 1e-{ctx.working_digits}"
            )
        return out
    raise InvalidSlope(f"unsupported real type {type(alpha).__name__}")


def reciprocal(alpha):
    if isinstance(alpha, Rational):
        return 1 / Fraction(alpha)
    if not alpha > 0:
        raise InvalidSlope("reciprocal requires a positive value")
    return alpha.reciprocal()


def integer_part(x) -> int:
    if isinstance(x, Rational):
        return math.floor(x)
    return x.floor()


def fractional_part(x):
    if isinstance(x, Rational):
        return Fraction(x) - math.floor(x)
    return x.fractional_part


def to_decimal(x, digits: int) -> Decimal:
    """Truncate ``x`` to ``digits`` places after the decimal point."""
    if isinstance(x, Rational):
        return Decimal(math.floor(Fraction(x) * 10**digits)).scaleb(-digits)
    return x.to_decimal(digits)


def ln(x, digits: int) -> Decimal:
    """Natural log of a positive real with absolute error below ``10**-digits``.

    Computed by ``Decimal.ln`` on a truncated expansion of ``x``.
    """
    guard = digits + 10
    if isinstance(x, DecimalLiteral) and x.radius / x.center > Fraction(1, 10**digits):
        raise PrecisionExhausted("literal does not carry enough digits for this logarithm")
    with localcontext() as c:
        c.prec = guard + 10
        return to_decimal(x, guard).ln()


def _interval(x, digits: int) -> tuple[Fraction, Fraction]:
    if isinstance(x, Rational):
        f = Fraction(x)
        return f, f
    return x.interval(digits)


def compare(x, y, ctx: PrecisionContext | None = None) -> int:
    """Certified ordering of two reals: -1, 0 or 1.

    Exact when both values live in the same quadratic field; otherwise the
    values are enclosed in intervals whose precision doubles until they are
    disjoint or ``ctx.max_digits`` is reached.
    """
    exact = (Rational, QuadraticSurd)
    if isinstance(x, exact) and isinstance(y, exact):
        if isinstance(x, Rational) and isinstance(y, Rational):
            return (x > y) - (x < y)
        if not (isinstance(x, QuadraticSurd) and isinstance(y, QuadraticSurd) and x.d != y.d):
            diff = x - y
            if isinstance(diff, QuadraticSurd):
                return diff.sign()
            return (diff > 0) - (diff < 0)
    ctx = ctx or PrecisionContext()
    digits = ctx.working_digits
    while True:
        xl, xh = _interval(x, digits)
        yl, yh = _interval(y, digits)
        if xh < yl:
            return -1
        if yh < xl:
            return 1
        if digits >= ctx.max_digits:
            raise PrecisionExhausted(f"cannot order {x} and {y} within {ctx.max_digits} digits")
        digits = min(2 * digits, ctx.max_digits)


def parse_real(spec: str) -> RealSlope:
    """Parse ``phi``, ``phi2``, ``surd:p,q,d[,r]``, ``dec:<digits>`` or ``inv:<spec>``."""
    spec = spec.strip()
    if spec.startswith("inv:"):
        return reciprocal(parse_real(spec[4:]))
    if spec == "phi":
        return phi()
    if spec == "phi2":
        return phi2()
    if spec.startswith("surd:"):
        try:
            parts = [int(v) for v in spec[5:].split(",")]
        except ValueError as exc:
            raise InvalidSlope(f"bad surd spec {spec!r}") from exc
        if len(parts) not in (3, 4):
            raise InvalidSlope(f"surd spec needs p,q,d[,r]: {spec!r}")
        return QuadraticSurd(*parts)
    if spec.startswith("dec:"):
        return DecimalLiteral.parse(spec[4:])
    raise InvalidSlope(f"unrecognized real spec {spec!r}")


def parse_slope(spec: str) -> RealSlope:
    return as_slope(parse_real(spec))


# -- seeded random surds -----------------------------------------------------

SCAN_SEED = 0x5EED
_SCAN_D = (2, 3, 5, 6, 7, 10)


def random_surd_slope(rng, lo: int = 1, hi: int = 10) -> QuadraticSurd:
    """A surd ``(p + q sqrt d)/r`` in ``(lo, hi)`` with small parameters.

    ``p, q`` are drawn from 1..9, ``d`` from a fixed squarefree list and ``r``
    from 1..4; draws outside the interval are rejected.
    """
    while True:
        p = int(rng.integers(1, 10))
        q = int(rng.integers(1, 10))
        d = int(rng.choice(_SCAN_D))
        r = int(rng.integers(1, 5))
        x = QuadraticSurd(p, q, d, r)
        if x > lo and x < hi:
            return x


def random_surd_pairs(count: int, seed: int = SCAN_SEED, lo: int = 1, hi: int = 10):
    rng = np.random.default_rng(seed)
    return [(random_surd_slope(rng, lo, hi), random_surd_slope(rng, lo, hi)) for _ in range(count)]
