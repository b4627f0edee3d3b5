"""Series evaluators, identity checks and limit/conjecture experiments.

Notation used throughout: for a slope ``a`` write ``a_n = [a n]``,
``q = [a]``, ``theta = {a}`` and ``a'_n = [n / a]``. The plain fractional-part
sum of a slope ``c`` is

    S_c = sum_{n >= 1} {(n+1)/c} / (n(n+1))

and its shifted companion with offset ``o`` is

    R_c(o) = sum_{n >= 1} {theta (c'_{n+1} + o)} / (n(n+1)).

Both have nonnegative numerators below one, so truncating after ``N`` terms
leaves a tail in ``[0, 1/(N+1))``.

All sums are accumulated as :class:`~beatty_lab.accumulate.Approx` values whose
centers are exact rationals, so results are bit-identical across runs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction

import numpy as np

from . import accumulate as acc
from . import arith, kernels
from .accumulate import Approx
from .arith import PrecisionContext, QuadraticSurd, as_slope

UNKNOWN = "unknown"


def _dec_up(x: Fraction | None) -> Decimal | None:
    """Round a nonnegative bound up to 3 significant digits."""
    if x is None:
        return None
    if x == 0:
        return Decimal(0)
    with localcontext() as c:
        c.prec = 3
        c.rounding = ROUND_CEILING
        return Decimal(x.numerator) / Decimal(x.denominator)


@dataclass(frozen=True)
class SeriesEvaluation:
    """A truncated or partial sum.

    ``tail_bound`` is a proven bound on the distance to the infinite sum, or
    ``None`` when no such bound exists (divergent series, or partial sums of
    the ratio series). ``rounding_bound`` covers all arithmetic error in
    ``value`` itself.
    """

    value: Decimal
    terms_used: int
    tail_bound: Decimal | None
    working_digits: int
    rounding_bound: Decimal = Decimal(0)
    method: str = ""
    cauchy_gap: Decimal | None = None
    approx: Approx | None = field(default=None, repr=False, compare=False)

    @property
    def error_bound(self) -> Decimal | None:
        if self.tail_bound is None:
            return None
        return self.tail_bound + self.rounding_bound

    def to_dict(self) -> dict:
        return {
            "value": str(self.value),
            "terms_used": self.terms_used,
            "tail_bound": UNKNOWN if self.tail_bound is None else str(self.tail_bound),
            "rounding_bound": str(self.rounding_bound),
            "working_digits": self.working_digits,
            "method": self.method,
            "cauchy_gap": None if self.cauchy_gap is None else str(self.cauchy_gap),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _evaluation(a: Approx, terms: int, tail: Fraction | None, ctx: PrecisionContext, method: str,
                gap: Fraction | None = None) -> SeriesEvaluation:
    value, bound = a.to_decimal(ctx.working_digits)
    return SeriesEvaluation(value, terms, _dec_up(tail), ctx.working_digits, _dec_up(bound), method,
                            _dec_up(gap), a)


@dataclass(frozen=True)
class IdentityReport:
    """One numerical instance of an identity.

    ``residual = |lhs.value - rhs.value|``; ``tolerance`` is what the residual
    is allowed to be given the stated bounds. ``extra`` carries check-specific
    diagnostics (alternative conventions, exact flags, Cauchy gaps).
    """

    name: str
    lhs: SeriesEvaluation
    rhs: SeriesEvaluation
    residual: Decimal
    tolerance: Decimal
    params: dict
    convention: str | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "lhs": self.lhs.to_dict(),
            "rhs": self.rhs.to_dict(),
            "residual": str(self.residual),
            "tolerance": str(self.tolerance),
            "convention": self.convention,
            "pass": self.passed,
            "extra": {k: (v if isinstance(v, (bool, int, type(None))) else str(v)) for k, v in self.extra.items()},
        }


def _report(name, lhs: SeriesEvaluation, rhs: SeriesEvaluation, tol: Fraction, params, convention=None,
            **extra) -> IdentityReport:
    residual = abs(lhs.approx.value - rhs.approx.value)
    return IdentityReport(name, lhs, rhs, _dec_up(residual) if residual else Decimal(0), _tol_dec(tol), params,
                          convention, extra)


def _tol_dec(x: Fraction) -> Decimal:
    with localcontext() as c:
        c.prec = 6
        c.rounding = ROUND_CEILING
        return Decimal(x.numerator) / Decimal(x.denominator)


def _ctx(ctx: PrecisionContext | None) -> PrecisionContext:
    return ctx if ctx is not None else PrecisionContext()


def _digits(ctx: PrecisionContext) -> int:
    return ctx.working_digits + 10


def _upper(x) -> Fraction:
    """A rational upper bound for a real."""
    return x.interval(12)[1] if not isinstance(x, (int, Fraction)) else Fraction(x)


def _check_pos(name: str, v: int, zero_ok: bool = False) -> int:
    if int(v) != v or v < (0 if zero_ok else 1):
        raise ValueError(f"{name} must be a {'nonnegative' if zero_ok else 'positive'} integer, got {v}")
    return int(v)


# -- ratio series -------------------------------------------------------------


def ratio_partial_sums(a, b, num_off: int, den_off_a: int, den_off_b: int, checkpoints,
                       ctx: PrecisionContext | None = None) -> dict[int, Approx]:
    """Partial sums of ``sum_n (a_{n+u}/a_{n+v} - b_{n+u}/b_{n+w})`` at each checkpoint.

    Each term is rewritten as ``1 + (a_{n+u} - a_{n+v})/a_{n+v}`` so the ones
    cancel and only small integer numerators are divided.
    """
    ctx = _ctx(ctx)
    as_slope(a)
    as_slope(b)
    u, v, w = (_check_pos(n, x, True) for n, x in (("num_off", num_off), ("den_off_a", den_off_a),
                                                    ("den_off_b", den_off_b)))
    cps = sorted({_check_pos("m", m) for m in checkpoints})
    off = max(u, v, w)
    running = Approx(Fraction(0))
    out: dict[int, Approx] = {}
    start = 1
    for cp in cps:
        for lo, hi in acc.chunks(start, cp + 1):
            L = hi - lo
            span = np.arange(lo, hi + off, dtype=np.int64)
            A = kernels.floor_mul_array(a, span)
            B = kernels.floor_mul_array(b, span)
            da = A[v:v + L]
            db = B[w:w + L]
            running = running + (acc.quotient_sum(A[u:u + L] - da, da, ctx)
                                 - acc.quotient_sum(B[u:u + L] - db, db, ctx))
        out[cp] = running
        start = cp + 1
    return out


def ratio_series_general(a, b, num_off: int, den_off_a: int, den_off_b: int, m: int,
                         ctx: PrecisionContext | None = None) -> SeriesEvaluation:
    """``sum_{n<=m} (a_{n+u}/a_{n+v} - b_{n+u}/b_{n+w})``; never claims convergence."""
    ctx = _ctx(ctx)
    s = ratio_partial_sums(a, b, num_off, den_off_a, den_off_b, [m], ctx)[m]
    return _evaluation(s, m, None, ctx, "partial")


def ratio_series_partial(a, b, k: int, m: int, ctx: PrecisionContext | None = None,
                         with_gap: bool = False) -> SeriesEvaluation:
    """``sum_{n<=m} (a_{n+k}/a_n - b_{n+k}/b_n)``.

    With ``with_gap`` the sum is also taken to ``2m`` and ``|s_2m - s_m|`` is
    reported as ``cauchy_gap`` (an empirical indicator, not a bound).
    """
    ctx = _ctx(ctx)
    k = _check_pos("k", k)
    cps = [m, 2 * m] if with_gap else [m]
    sums = ratio_partial_sums(a, b, k, 0, 0, cps, ctx)
    gap = abs(sums[2 * m].value - sums[m].value) + sums[2 * m].err + sums[m].err if with_gap else None
    return _evaluation(sums[m], m, None, ctx, "partial", gap)


# -- fractional-part series ---------------------------------------------------


def _frac_tables(c, N: int, offsets, ctx: PrecisionContext, plain: bool = True):
    """``(S_c, {o: R_c(o)})`` truncated after ``N`` terms."""
    as_slope(c)
    N = _check_pos("N", N)
    inv = c.reciprocal()
    theta = c.fractional_part
    S = Approx(Fraction(0))
    R = {o: Approx(Fraction(0)) for o in offsets}
    for lo, hi in acc.chunks(1, N + 1):
        n = np.arange(lo, hi, dtype=np.int64)
        dens = n * (n + 1)
        if plain:
            S = S + acc.frac_sum(inv, n + 1, dens, ctx)
        if R:
            cp = kernels.floor_mul_array(inv, n + 1)
            for o in R:
                R[o] = R[o] + acc.frac_sum(theta, cp + o, dens, ctx)
    return S, R


def frac_series_single(c, N: int, shift_k: int = 0, variant: str = "plain",
                       ctx: PrecisionContext | None = None) -> SeriesEvaluation:
    """``S_c`` (plain) or ``R_c(shift_k + 1)`` (shifted), truncated at ``N``."""
    ctx = _ctx(ctx)
    if variant == "plain":
        S, _ = _frac_tables(c, N, (), ctx)
        return _evaluation(S, N, Fraction(1, N + 1), ctx, _method(ctx))
    if variant == "shifted":
        o = _check_pos("shift_k", shift_k, True) + 1
        _, R = _frac_tables(c, N, (o,), ctx, plain=False)
        return _evaluation(R[o], N, Fraction(1, N + 1), ctx, _method(ctx))
    raise ValueError(f"variant must be 'plain' or 'shifted', got {variant!r}")


def _method(ctx: PrecisionContext) -> str:
    return "float64+fsum" if ctx.use_float else "fixed-point"


def _T_approx(a, b, N: int, ctx: PrecisionContext) -> tuple[Approx, Fraction]:
    Sa, _ = _frac_tables(a, N, (), ctx)
    Sb = Sa if _same(a, b) else _frac_tables(b, N, (), ctx)[0]
    digits = _digits(ctx)
    T = acc.real(a, digits) * Sa - acc.real(b, digits) * Sb
    tail = max(_upper(a), _upper(b)) / (N + 1)
    return T, tail


def _same(a, b) -> bool:
    return type(a) is type(b) and a == b


def frac_series_T(a, b, N: int, ctx: PrecisionContext | None = None) -> SeriesEvaluation:
    """``sum_n (a{(n+1)/a} - b{(n+1)/b}) / (n(n+1))`` truncated at ``N``."""
    ctx = _ctx(ctx)
    as_slope(a)
    as_slope(b)
    T, tail = _T_approx(a, b, N, ctx)
    return _evaluation(T, N, tail, ctx, _method(ctx))


def frac_series_F(a, b, N: int, ctx: PrecisionContext | None = None) -> SeriesEvaluation:
    """``sum_n (a{bn} - b{an}) / (a_n b_n)`` truncated at ``N >= 2``."""
    ctx = _ctx(ctx)
    as_slope(a)
    as_slope(b)
    N = _check_pos("N", N)
    if N < 2:
        raise ValueError("N must be at least 2 for the tail bound")
    Xa = Approx(Fraction(0))
    Xb = Approx(Fraction(0))
    for lo, hi in acc.chunks(1, N + 1):
        n = np.arange(lo, hi, dtype=np.int64)
        dens = kernels.floor_mul_array(a, n) * kernels.floor_mul_array(b, n)
        Xa = Xa + acc.frac_sum(b, n, dens, ctx)
        Xb = Xb + acc.frac_sum(a, n, dens, ctx)
    digits = _digits(ctx)
    total = acc.real(a, digits) * Xa - acc.real(b, digits) * Xb
    ua, ub = _upper(a), _upper(b)
    la, lb = a.interval(12)[0], b.interval(12)[0]
    tail = (ua + ub) / (la * lb * (N - 1))
    return _evaluation(total, N, tail, ctx, _method(ctx))


# -- shifted ratio identity ---------------------------------------------------

CONVENTIONS_T2 = ("printed", "shifted")


def _jrange(k: int, convention: str):
    if convention == "printed":
        return range(1, k + 1)
    if convention == "shifted":
        return range(0, k)
    raise ValueError(f"convention must be one of {CONVENTIONS_T2}, got {convention!r}")


def _frac_of(x, j: int, digits: int) -> Approx:
    if j == 0:
        return Approx(Fraction(0))
    return acc.real(arith.frac_mul(x, j, PrecisionContext(digits, max(digits, 200))), digits)


def _theorem2_parts(a, b, k: int, N: int, ctx: PrecisionContext, conventions):
    digits = _digits(ctx)
    js_all = sorted({j for conv in conventions for j in _jrange(k, conv)})
    Sa, Ra = _frac_tables(a, N, js_all, ctx)
    if _same(a, b):
        Sb, Rb = Sa, Ra
    else:
        Sb, Rb = _frac_tables(b, N, js_all, ctx)
    T = acc.real(a, digits) * Sa - acc.real(b, digits) * Sb
    logs = acc.log(a, digits) - acc.log(b, digits) if not _same(a, b) else Approx(Fraction(0))
    ta, tb = a.fractional_part, b.fractional_part
    out = {}
    for conv in conventions:
        js = _jrange(k, conv)
        J = sum((_frac_of(ta, j, digits) - _frac_of(tb, j, digits) for j in js), Approx(Fraction(0)))
        Sh = sum((Ra[j] - Rb[j] for j in js), Approx(Fraction(0)))
        out[conv] = k * logs + J - k * T - Sh
    tail = k * (max(_upper(a), _upper(b)) + 1) / (N + 1)
    return out, tail


def theorem2_rhs(a, b, k: int, N: int, ctx: PrecisionContext | None = None,
                 convention: str = "printed") -> SeriesEvaluation:
    """Right-hand side of the logarithm identity for shift ``k``.

    ``k (log a - log b) + sum_j ({j theta_a} - {j theta_b}) - k T(a, b)
    - sum_j (R_a(j) - R_b(j))`` with ``j = 1..k`` (``convention='printed'``) or
    ``j = 0..k-1`` (``'shifted'``); the infinite sums are truncated at ``N``.
    """
    ctx = _ctx(ctx)
    as_slope(a)
    as_slope(b)
    k = _check_pos("k", k)
    parts, tail = _theorem2_parts(a, b, k, N, ctx, (convention,))
    return _evaluation(parts[convention], N, tail, ctx, _method(ctx))


def identity_residual(a, b, k: int, m: int, N: int, ctx: PrecisionContext | None = None,
                      convention: str = "printed", compare_conventions: bool = False) -> IdentityReport:
    """Partial sum of the ratio series against the truncated right-hand side.

    tolerance = RHS tail bound + 10 * |s_2m - s_m| + rounding bounds. The
    Cauchy gap stands in for the unknown LHS truncation error and is kept
    separate in ``extra``.
    """
    ctx = _ctx(ctx)
    as_slope(a)
    as_slope(b)
    k = _check_pos("k", k)
    lhs = ratio_series_partial(a, b, k, m, ctx, with_gap=True)
    convs = CONVENTIONS_T2 if compare_conventions else (convention,)
    parts, tail = _theorem2_parts(a, b, k, N, ctx, convs)
    rhs = _evaluation(parts[convention], N, tail, ctx, _method(ctx))
    gap = Fraction(lhs.cauchy_gap)
    tol = tail + 10 * gap + lhs.approx.err + parts[convention].err
    extra = {"cauchy_gap": lhs.cauchy_gap, "rhs_tail_bound": rhs.tail_bound}
    for conv in convs:
        if conv != convention:
            extra[f"residual_{conv}"] = _dec_up(abs(lhs.approx.value - parts[conv].value))
    return _report("theorem2", lhs, rhs, tol, {"a": a, "b": b, "k": k, "m": m, "N": N}, convention, **extra)


# -- harmonic sums over a Beatty sequence ------------------------------------


def _low_ctx(ctx: PrecisionContext | None) -> PrecisionContext:
    # residuals here are O(1/m); float64 terms with certified rounding suffice
    return ctx if ctx is not None else PrecisionContext.for_target(5)


def _theorem3_lhs_terms(c, shifts, m: int):
    """Integer numerators ``q + g(i + s)`` per shift and denominators ``c_i``."""
    theta = c.fractional_part
    q = c.integer_part
    i = np.arange(1, m + 1, dtype=np.int64)
    dens = kernels.floor_mul_array(c, i)
    nums = {}
    for s in shifts:
        F = kernels.floor_mul_array(theta, np.arange(s + 1, m + s + 2, dtype=np.int64))
        nums[s] = q + np.diff(F)
    return nums, dens


def theorem3_lhs(c, k: int, m: int, ctx: PrecisionContext | None = None) -> Approx:
    """``sum_{n <= [mc]} (q f(n) + f(n) g([n/c] + k + 1)) / n``.

    ``f`` is the indicator of the Beatty sequence of ``c`` and ``g`` that of
    ``1/theta``. Only members ``n = c_i`` contribute, and for those
    ``[n/c] + 1 = i``, so the sum runs over ``i <= m`` with denominator ``c_i``.
    """
    ctx = _low_ctx(ctx)
    nums, dens = _theorem3_lhs_terms(c, (k,), m)
    return acc.quotient_sum(nums[k], dens, ctx)


def _main3(c, m: int, digits: int) -> Approx:
    return 1 + acc.log(m, digits) + acc.log(c, digits) + acc.decimal_const(arith.EULER_GAMMA)


def theorem3_rhs(c, k: int, m: int, N: int, ctx: PrecisionContext | None = None) -> SeriesEvaluation:
    ctx = _low_ctx(ctx)
    return theorem3_residuals(c, k, [m], N, ctx)[0].rhs


def theorem3_residuals(c, k: int, ms, N: int = 10**6, ctx: PrecisionContext | None = None) -> list[IdentityReport]:
    """:func:`theorem3_check` for several ``m`` sharing one evaluation of the
    infinite sums."""
    ctx = _low_ctx(ctx)
    as_slope(c)
    k = _check_pos("k", k, True)
    digits = _digits(ctx)
    S, R = _frac_tables(c, N, (k + 1,), ctx)
    inf = acc.real(c, digits) * S + R[k + 1]
    tail = (_upper(c) + 1) / (N + 1)
    lead = _frac_of(c.fractional_part, k + 1, digits)
    out = []
    for m in ms:
        m = _check_pos("m", m)
        if m < 2:
            raise ValueError("m must be at least 2")
        lhs_a = theorem3_lhs(c, k, m, ctx)
        rhs_a = _main3(c, m, digits) + lead - inf
        lhs = _evaluation(lhs_a, m, Fraction(0), ctx, "exact-quotients")
        rhs = _evaluation(rhs_a, N, tail, ctx, _method(ctx))
        tol = Fraction(10, m) + tail + lhs_a.err + rhs_a.err
        out.append(_report("theorem3", lhs, rhs, tol, {"c": c, "k": k, "m": m, "N": N}, "plus",
                           signed_residual=_signed(lhs_a, rhs_a)))
    return out


def _signed(lhs: Approx, rhs: Approx) -> Decimal:
    with localcontext() as c:
        c.prec = 12
        d = lhs.value - rhs.value
        return Decimal(d.numerator) / Decimal(d.denominator)


def theorem3_check(c, k: int, m: int, N: int = 10**6, ctx: PrecisionContext | None = None) -> IdentityReport:
    """Compare the harmonic Beatty sum with its asymptotic formula.

    rhs = 1 + log m + log c + gamma + {theta (k+1)} - (c S_c + R_c(k+1)); the
    residual is expected to be O(1/m), and the tolerance is ``10/m`` plus the
    tail and rounding bounds.
    """
    return theorem3_residuals(c, k, [m], N, ctx)[0]


CONVENTIONS_T4 = ("consistent", "printed")


def theorem4_check(c, k: int, m: int, N: int = 10**6, ctx: PrecisionContext | None = None,
                   convention: str = "consistent") -> IdentityReport:
    """The ``k``-fold aggregate of the harmonic Beatty sum (shifts ``j = 1..k``).

    The left side is summed directly with numerators ``kq + sum_j g(i + j)``
    and checked to equal the sum of the ``k`` single-shift numerators exactly.
    ``'consistent'`` sums the single-shift right sides; ``'printed'`` uses
    ``sum_j {theta j}`` and ``k R_c(k+1)`` in place of ``sum_j {theta (j+1)}``
    and ``sum_j R_c(j+1)``. The residual of the other reading is in ``extra``.
    """
    ctx = _low_ctx(ctx)
    as_slope(c)
    k = _check_pos("k", k)
    m = _check_pos("m", m)
    if convention not in CONVENTIONS_T4:
        raise ValueError(f"convention must be one of {CONVENTIONS_T4}")
    digits = _digits(ctx)
    shifts = range(1, k + 1)
    nums, dens = _theorem3_lhs_terms(c, shifts, m)
    theta = c.fractional_part
    q = c.integer_part
    i = np.arange(1, m + 1, dtype=np.int64)
    F = kernels.floor_mul_array(theta, np.arange(1, m + k + 2, dtype=np.int64))
    g = np.diff(F)  # g[t-1] = g(t)
    agg = k * q + sum(g[i - 1 + j] for j in shifts)
    exact_agg = bool(np.array_equal(agg, sum(nums[j] for j in shifts)))
    lhs_a = acc.quotient_sum(agg, dens, ctx)

    offsets = sorted({j + 1 for j in shifts} | {k + 1})
    S, R = _frac_tables(c, N, offsets, ctx)
    cS = acc.real(c, digits) * S
    main = _main3(c, m, digits)
    consistent = sum((main + _frac_of(theta, j + 1, digits) - cS - R[j + 1] for j in shifts), Approx(Fraction(0)))
    printed = (k * main + sum((_frac_of(theta, j, digits) for j in shifts), Approx(Fraction(0)))
               - k * cS - k * R[k + 1])
    rhs_by = {"consistent": consistent, "printed": printed}
    rhs_a = rhs_by[convention]
    other = "printed" if convention == "consistent" else "consistent"
    tail = k * (_upper(c) + 1) / (N + 1)
    lhs = _evaluation(lhs_a, m, Fraction(0), ctx, "exact-quotients")
    rhs = _evaluation(rhs_a, N, tail, ctx, _method(ctx))
    tol = Fraction(10 * k, m) + tail + lhs_a.err + rhs_a.err
    return _report("theorem4", lhs, rhs, tol, {"c": c, "k": k, "m": m, "N": N}, convention,
                   lhs_aggregation_exact=exact_agg,
                   **{f"residual_{other}": _dec_up(abs(lhs_a.value - rhs_by[other].value))})


# -- golden decomposition -----------------------------------------------------

READINGS = ("corrected", "printed")


def golden_parts(m: int, reading: str = "corrected") -> dict[str, Fraction]:
    """Exact ``H``, ``H1``, ``H2``, ``H1'``, ``H2'`` for ``a = phi``, ``b = phi^2``.

    ``f`` and ``g`` are the indicators of ``A`` and ``B`` cut off at
    ``y = [ma]`` and ``x = [mb]``. ``H1`` pairs members ``n = a_i`` with the
    class of their index ``i = [n/a] + 1``; ``H2`` does the same for ``B``
    (``corrected``) or, as typeset, reuses ``[n/a]`` with offsets 1 and 2
    (``printed``, which does not balance).
    """
    m = _check_pos("m", m)
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    a, b = arith.phi(), arith.phi2()
    ia, ib = a.reciprocal(), b.reciprocal()
    x, y = b.floor_mul(m), a.floor_mul(m)
    top = x + 3
    fl_a = kernels.floor_mul_array(ia, np.arange(0, top + 1, dtype=np.int64)).tolist()
    fl_b = kernels.floor_mul_array(ib, np.arange(0, top + 1, dtype=np.int64)).tolist()

    def f(n):  # n in A, n <= y
        return fl_a[n + 1] - fl_a[n] if 1 <= n <= y else 0

    def g(n):  # n in B, n <= x
        return fl_b[n + 1] - fl_b[n] if 1 <= n <= x else 0

    A = kernels.floor_mul_array(a, np.arange(1, m + 2, dtype=np.int64)).tolist()
    B = kernels.floor_mul_array(b, np.arange(1, m + 2, dtype=np.int64)).tolist()
    H = sum(Fraction(A[n], A[n - 1]) - Fraction(B[n], B[n - 1]) for n in range(1, m + 1))

    H1 = sum(Fraction(2 * f(n) * f(fl_a[n] + 1) + f(n) * g(fl_a[n] + 1), n) for n in range(1, x + 1))
    if reading == "corrected":
        H2 = sum(Fraction(g(n) * (3 * f(fl_b[n] + 1) + 2 * g(fl_b[n] + 1)), n) for n in range(1, x + 1))
    else:
        H2 = sum(Fraction(3 * g(n) * f(fl_a[n] + 1) + 2 * g(n) * g(fl_a[n] + 2), n) for n in range(1, x + 1))

    # index-class form: classes of n itself
    inA = [fl_a[n + 1] - fl_a[n] for n in range(m + 1)]
    H1p = sum(Fraction(2 if inA[n] else 1, A[n - 1]) for n in range(1, m + 1))
    H2p = sum(Fraction(3 if inA[n] else 2, B[n - 1]) for n in range(1, m + 1))
    return {"H": H, "H1": H1, "H2": H2, "H1'": H1p, "H2'": H2p}


def golden_decomposition_check(m: int, reading: str = "corrected",
                               ctx: PrecisionContext | None = None) -> IdentityReport:
    """Exact check of ``H = H1 - H2`` (and ``H = H1' - H2'``) for ``phi, phi^2``."""
    ctx = _ctx(ctx)
    p = golden_parts(m, reading)
    lhs = _evaluation(Approx(p["H"]), m, Fraction(0), ctx, "exact-rational")
    rhs = _evaluation(Approx(p["H1"] - p["H2"]), m, Fraction(0), ctx, "exact-rational")
    return _report("lemma5", lhs, rhs, Fraction(0), {"m": m}, reading,
                   exact_equal=p["H"] == p["H1"] - p["H2"],
                   index_class_equal=p["H"] == p["H1'"] - p["H2'"],
                   H=p["H"])


# -- limits, constants, conjectures --------------------------------------------


@dataclass(frozen=True)
class LimitPoint:
    k: int
    m: int
    estimate: Decimal
    deviation: Decimal

    def to_dict(self) -> dict:
        return {"k": self.k, "m": self.m, "estimate": str(self.estimate), "deviation": str(self.deviation)}


DEFAULT_K_SCHEDULE = tuple(2**i for i in range(2, 13))


def main_theorem_limit(a, b, k_schedule=DEFAULT_K_SCHEDULE, C: int = 16, N: int = 10**6,
                       ctx: PrecisionContext | None = None, target=None) -> list[LimitPoint]:
    """Estimates ``(1/k) sum_{n <= C k^2} (a_{n+k}/a_n - b_{n+k}/b_n) + T(a, b)``.

    Each estimate is compared with ``log(a/b)``; ``target`` overrides that
    value (tests pass an independently computed logarithm).
    """
    ctx = _ctx(ctx)
    as_slope(a)
    as_slope(b)
    ks = [_check_pos("k", k) for k in k_schedule]
    if any(x >= y for x, y in zip(ks, ks[1:])):
        raise ValueError("k_schedule must be strictly increasing")
    digits = _digits(ctx)
    if target is None:
        target = acc.log(a, digits) - acc.log(b, digits) if not _same(a, b) else Approx(Fraction(0))
    elif not isinstance(target, Approx):
        target = Approx(Fraction(target))
    T, _ = _T_approx(a, b, N, ctx)
    out = []
    for k in ks:
        m = C * k * k
        s = ratio_partial_sums(a, b, k, 0, 0, [m], ctx)[m]
        est = Approx(s.value / k, s.err / k) + T
        e_val, _ = est.to_decimal(ctx.working_digits)
        dev, _ = Approx(abs(est.value - target.value)).to_decimal(ctx.working_digits)
        out.append(LimitPoint(k, m, e_val, dev))
    return out


def frullani_constant_P(a, b, k: int, m: int, ctx: PrecisionContext | None = None) -> SeriesEvaluation:
    """``k log(a/b) - sum_{n <= m} (a_{n+k}/a_n - b_{n+k}/b_n)``, with the gap to ``2m``."""
    ctx = _ctx(ctx)
    s = ratio_series_partial(a, b, k, m, ctx, with_gap=True)
    digits = _digits(ctx)
    logs = acc.log(a, digits) - acc.log(b, digits) if not _same(a, b) else Approx(Fraction(0))
    P = k * logs - s.approx
    return _evaluation(P, m, None, ctx, "partial", Fraction(s.cauchy_gap))


@dataclass(frozen=True)
class ScanRecord:
    """One conjecture-scan instance. ``bound_1`` and ``bound_pi2_6`` are True
    only when ``deviation + tail + rounding`` is certified below the bound;
    ``violation_1`` is True only when a violation is certified."""

    a: object
    b: object
    T_value: Decimal
    tail_bound: Decimal
    deviation: Decimal
    error_bound: Decimal
    bound_pi2_6: bool
    bound_1: bool
    violation_1: bool

    def to_dict(self) -> dict:
        return {
            "a": self.a.spec(), "b": self.b.spec(), "T_value": str(self.T_value),
            "tail_bound": str(self.tail_bound), "deviation": str(self.deviation),
            "error_bound": str(self.error_bound), "bound_pi2_6": self.bound_pi2_6,
            "bound_1": self.bound_1, "violation_1": self.violation_1,
        }


def conjecture_scan(pairs, N: int = 10**6, ctx: PrecisionContext | None = None) -> list[ScanRecord]:
    """``|log(a/b) - T(a, b)|`` for each pair, with certified bound flags.

    Defaults to the float64 summation route: the quantities compared against
    1 and pi^2/6 need only a handful of digits.
    """
    ctx = _low_ctx(ctx)
    digits = max(_digits(ctx), 25)
    pi26 = acc.decimal_const(arith.PI2_OVER_6)
    out = []
    for a, b in pairs:
        as_slope(a)
        as_slope(b)
        T, tail = _T_approx(a, b, N, ctx)
        target = acc.log(a, digits) - acc.log(b, digits) if not _same(a, b) else Approx(Fraction(0))
        d = abs(target.value - T.value)
        err = tail + T.err + target.err
        dev, _ = Approx(d).to_decimal(12)
        T_val, _ = T.to_decimal(ctx.working_digits)
        out.append(ScanRecord(a, b, T_val, _dec_up(tail), dev, _dec_up(err),
                              bound_pi2_6=d + err < pi26.value - pi26.err,
                              bound_1=d + err < 1,
                              violation_1=d - err > 1))
    return out
