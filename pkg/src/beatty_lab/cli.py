"""Command-line interface: ``beatty-lab <command> ...``.

Every command emits one report (or a list of them) in json, csv or plain
form. Exit codes: 0 success, 1 verification failure, 2 usage error,
3 precision exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal
from fractions import Fraction

from . import arith, counting, oracle, series, sturmian
from .arith import PrecisionContext, parse_real, parse_slope
from .beatty import beatty_terms
from .errors import AmbiguousFloor, InvalidSlope, PrecisionExhausted

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECISION = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _report(op: str, params: dict, value=None, terms_used=None, tail_bound=None, residual=None,
            passed=None, **details) -> dict:
    out = {
        "op": op,
        "params": {k: _s(v) for k, v in params.items()},
        "value": value,
        "terms_used": terms_used,
        "tail_bound": tail_bound,
        "residual": residual,
        "pass": passed,
    }
    if details:
        out["details"] = details
    return out


def _s(v):
    if isinstance(v, (int, bool, str)) or v is None:
        return v
    if hasattr(v, "spec"):
        return v.spec()
    return str(v)


def _series_report(op: str, params: dict, ev: series.SeriesEvaluation, **details) -> dict:
    d = ev.to_dict()
    return _report(op, params, d["value"], ev.terms_used, d["tail_bound"], None, None,
                   rounding_bound=d["rounding_bound"], working_digits=ev.working_digits,
                   method=ev.method, cauchy_gap=d["cauchy_gap"], **details)


def _identity_report(op: str, rep: series.IdentityReport) -> dict:
    return _report(op, rep.params, str(rep.lhs.value), rep.lhs.terms_used,
                   None if rep.rhs.tail_bound is None else str(rep.rhs.tail_bound), str(rep.residual),
                   rep.passed, rhs=str(rep.rhs.value), tolerance=str(rep.tolerance), convention=rep.convention,
                   **{k: _s(v) for k, v in rep.extra.items()})


# -- commands -------------------------------------------------------------------


def cmd_seq(args, ctx):
    alpha = parse_slope(args.slope)
    terms = [int(t) for t in beatty_terms(alpha, args.count)]
    return [_report("seq", {"slope": alpha, "count": args.count}, terms, args.count)]


def cmd_word(args, ctx):
    L = args.length
    if args.theta:
        theta = parse_real(args.theta)
        w = sturmian.characteristic_word(theta, L)
        return [_report("word", {"theta": theta, "length": L}, str(w), L, construction="characteristic")]
    if not args.a or not (args.b or args.shift):
        raise UsageError("word needs --theta, or --a with --b or --shift")
    a = parse_slope(args.a)
    pair = sturmian.SlopePairEqualFrac.from_shift(a, args.shift) if args.shift else \
        sturmian.SlopePairEqualFrac(a, parse_slope(args.b))
    f = sturmian.ratio_sign_word(pair, L)
    g = sturmian.characteristic_word(pair.theta, L)
    mm = f.first_mismatch(g)
    params = {"a": pair.a, "b": pair.b, "length": L}
    if args.construction == "ratio":
        return [_report("word", params, str(f), L, construction="ratio-sign")]
    if args.construction == "char":
        return [_report("word", params, str(g), L, construction="characteristic")]
    value = None if args.construction == "diff" else {"ratio_sign": str(f), "characteristic": str(g)}
    return [_report("word", params, value, L, None, None, mm is None, first_mismatch=mm)]


def cmd_count(args, ctx):
    c = parse_real(args.c)
    t = _parse_cutoff(args.t)
    if args.indicator:
        if args.k is None:
            raise UsageError("--indicator needs --k")
        res = counting.shifted_indicator_check(c, int(args.t), args.k)
        op = "shifted_indicator_sum"
    elif args.d is None:
        res = counting.count_members(c, t)
        op = "count_members"
    elif args.k is None:
        res = counting.count_cross(c, parse_real(args.d), t)
        op = "count_cross"
    else:
        res = counting.count_cross_shifted(c, parse_real(args.d), args.k, t)
        op = "count_cross_shifted"
    params = dict(res.params, t=args.t)
    if args.verify:
        return [_report(op, params, res.closed_form, None, None, None, res.match,
                        closed_form=res.closed_form, brute_force=res.brute_force, match=res.match)]
    return [_report(op, params, res.closed_form)]


def _parse_cutoff(t: str):
    try:
        return Fraction(t)
    except ValueError:
        return parse_real(t)


SERIES_KINDS = ("ratio", "general", "single", "T", "F", "theorem2-rhs", "P")


def cmd_series(args, ctx):
    kind = args.kind
    need = {"ratio": "ab", "general": "ab", "T": "ab", "F": "ab", "theorem2-rhs": "ab", "P": "ab", "single": "c"}[kind]
    a = parse_slope(args.a) if "a" in need and args.a else None
    b = parse_slope(args.b) if "b" in need and args.b else None
    if need == "ab" and (a is None or b is None):
        raise UsageError(f"series --kind {kind} needs --a and --b")
    if kind == "ratio":
        ev = series.ratio_series_partial(a, b, args.k, args.m, ctx, with_gap=args.gap)
        params = {"a": a, "b": b, "k": args.k, "m": args.m}
        orc = ("ratio", {"a": a, "b": b, "num_off": args.k}, args.m)
    elif kind == "general":
        ev = series.ratio_series_general(a, b, args.num_off, args.den_off_a, args.den_off_b, args.m, ctx)
        params = {"a": a, "b": b, "num_off": args.num_off, "den_off_a": args.den_off_a,
                  "den_off_b": args.den_off_b, "m": args.m}
        orc = ("ratio", {"a": a, "b": b, "num_off": args.num_off, "den_off_a": args.den_off_a,
                         "den_off_b": args.den_off_b}, args.m)
    elif kind == "single":
        if not args.c:
            raise UsageError("series --kind single needs --c")
        c = parse_slope(args.c)
        ev = series.frac_series_single(c, args.N, args.shift_k, args.variant, ctx)
        params = {"c": c, "N": args.N, "shift_k": args.shift_k, "variant": args.variant}
        sid = "frac_plain" if args.variant == "plain" else "frac_shifted"
        orc = (sid, {"c": c, "k": args.shift_k}, args.N)
    elif kind == "T":
        ev = series.frac_series_T(a, b, args.N, ctx)
        params = {"a": a, "b": b, "N": args.N}
        orc = ("T", {"a": a, "b": b}, args.N)
    elif kind == "F":
        ev = series.frac_series_F(a, b, args.N, ctx)
        params = {"a": a, "b": b, "N": args.N}
        orc = ("F", {"a": a, "b": b}, args.N)
    elif kind == "theorem2-rhs":
        ev = series.theorem2_rhs(a, b, args.k, args.N, ctx, args.convention)
        params = {"a": a, "b": b, "k": args.k, "N": args.N, "convention": args.convention}
        orc = None
    else:
        ev = series.frullani_constant_P(a, b, args.k, args.m, ctx)
        params = {"a": a, "b": b, "k": args.k, "m": args.m}
        orc = None
    rep = _series_report(f"series.{kind}", params, ev)
    if args.oracle:
        if orc is None:
            raise UsageError(f"no oracle for series kind {kind}")
        rep = _with_oracle(rep, ev, *orc)
    return [rep]


def _with_oracle(rep: dict, ev, sid: str, params: dict, n: int) -> dict:
    """Add a direct-summation oracle column at the same truncation.

    Same truncation means the tails cancel; the allowed gap is the kernel's
    rounding bound plus a margin for the oracle's own decimal rounding.
    """
    ov = oracle.oracle_sum(sid, params, n)
    diff = abs(Decimal(ev.value) - ov)
    allowed = ev.rounding_bound + Decimal(10) ** (-(ev.working_digits - 2))
    rep["residual"] = str(diff)
    rep["pass"] = diff <= allowed
    rep.setdefault("details", {})["oracle_value"] = str(+ov)
    return rep


IDENTITIES = ("theorem2", "theorem3", "theorem4", "lemma5", "limit")


def cmd_verify(args, ctx):
    ident = args.identity
    if ident == "lemma5":
        rep = series.golden_decomposition_check(args.m, args.reading, ctx)
        out = _identity_report("verify.lemma5", rep)
        out["pass"] = bool(rep.extra["exact_equal"])
        return [out]
    if ident == "limit":
        a, b = parse_slope(args.a), parse_slope(args.b)
        ks = [int(k) for k in args.k_schedule.split(",")] if args.k_schedule else series.DEFAULT_K_SCHEDULE
        target = oracle.oracle_log_ratio(a, b)
        pts = series.main_theorem_limit(a, b, ks, args.C, args.N, ctx, target=Fraction(target))
        devs = [p.deviation for p in pts]
        ok = devs[-1] < devs[0] / 4 if len(devs) > 1 else None
        return [_report("verify.limit", {"a": a, "b": b, "C": args.C, "N": args.N}, [p.to_dict() for p in pts],
                        None, None, str(devs[-1]), ok, target=str(target))]
    if ident == "theorem2":
        a, b = parse_slope(args.a), parse_slope(args.b)
        rep = series.identity_residual(a, b, args.k, args.m, args.N, ctx, args.convention,
                                       compare_conventions=args.compare)
        out = _identity_report("verify.theorem2", rep)
        if args.oracle:
            ov = oracle.oracle_sum("ratio", {"a": a, "b": b, "num_off": args.k}, args.m)
            d = abs(Decimal(rep.lhs.value) - ov)
            out["details"]["oracle_lhs"] = str(+ov)
            out["pass"] = out["pass"] and d <= Decimal(10) ** (-(ctx.working_digits - 2))
        return [out]
    c = parse_slope(args.c)
    low = PrecisionContext.for_target(min(args.precision, 5))
    if ident == "theorem3":
        rep = series.theorem3_check(c, args.k, args.m, args.N, low)
    else:
        rep = series.theorem4_check(c, args.k, args.m, args.N, low, args.t4_convention)
    out = _identity_report(f"verify.{ident}", rep)
    if args.oracle:
        if ident == "theorem3":
            ov = oracle.oracle_sum("theorem3_lhs", {"c": c, "k": args.k}, args.m)
        else:
            ov = sum(oracle.oracle_sum("theorem3_lhs", {"c": c, "k": j}, args.m) for j in range(1, args.k + 1))
        d = abs(Decimal(rep.lhs.value) - ov)
        out["details"]["oracle_lhs"] = str(+ov)
        out["pass"] = out["pass"] and d <= rep.lhs.rounding_bound + Decimal("1e-12")
    return [out]


def cmd_scan(args, ctx):
    seed = args.seed
    pairs = arith.random_surd_pairs(args.pairs, seed)
    low = PrecisionContext.for_target(min(args.precision, 5))
    recs = series.conjecture_scan(pairs, args.terms, low)
    return [_report("scan", {"seed": hex(seed), "terms": args.terms}, r.to_dict(), args.terms, str(r.tail_bound),
                    None, None) for r in recs]


def cmd_reproduce(args, ctx):
    from .reproduce import reproduce_rows

    rows = reproduce_rows(ctx, word_length=args.word_length)
    return [_report("reproduce", {"item": r["item"]}, r["computed"], None, None, r["diff"],
                    r["status"] != "FAIL", expected=r["expected"], status=r["status"], note=r.get("note", ""))
            for r in rows]


# -- output ---------------------------------------------------------------------


def _flatten(d: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in d.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            out[key] = json.dumps(v)
        else:
            out[key] = "" if v is None else v
    return out


def render(reports: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(reports[0] if len(reports) == 1 else reports, indent=2, default=str)
    if fmt == "csv":
        if len(reports) == 1 and reports[0]["op"] == "seq":
            rows = [{"n": i + 1, "term": t} for i, t in enumerate(reports[0]["value"])]
        else:
            rows = [_flatten(r) for r in reports]
        fields: list[str] = []
        for r in rows:
            fields += [k for k in r if k not in fields]
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    lines = []
    for r in reports:
        if r["op"] == "seq":
            lines.append(",".join(str(t) for t in r["value"]))
        elif r["op"] == "word" and isinstance(r["value"], str):
            lines.append(r["value"])
        elif r["op"] == "reproduce":
            d = r["details"]
            lines.append(f"{d['status']:<17} {r['params']['item']:<34} expected {d['expected']:<16} "
                         f"computed {r['value']:<24} |diff| {r['residual']} {d['note']}".rstrip())
        else:
            lines.append(" ".join(f"{k}={_plain(v)}" for k, v in _flatten(r).items() if v != ""))
    return "\n".join(lines)


def _plain(v):
    return v if not isinstance(v, str) or " " not in v else repr(v)


# -- parser -----------------------------------------------------------------------


def _seed(s: str) -> int:
    try:
        return int(s, 0) if s.lower().startswith("0x") else int(s, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"seed must be hexadecimal, got {s!r}") from None


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="beatty-lab", description="Beatty sequences, Sturmian words and "
                                "the logarithm identity for Beatty ratios.")
    p.add_argument("--precision", type=_nonneg, default=12, help="target output digits (default 12)")
    p.add_argument("--format", choices=("json", "csv", "plain"), default="plain")
    p.add_argument("--json", dest="format", action="store_const", const="json", help="shorthand for --format json")
    p.add_argument("--seed", type=_seed, default=arith.SCAN_SEED, help="hex seed for random scans")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seq", help="Beatty sequence terms")
    s.add_argument("--slope", required=True)
    s.add_argument("--count", type=_positive, required=True)
    s.set_defaults(func=cmd_seq)

    s = sub.add_parser("word", help="Sturmian words: ratio-sign and characteristic constructions")
    s.add_argument("--theta")
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--shift", type=_positive, help="use b = a + shift")
    s.add_argument("--length", type=_positive, required=True)
    s.add_argument("--construction", choices=("both", "ratio", "char", "diff"), default="both")
    s.set_defaults(func=cmd_word)

    s = sub.add_parser("count", help="counting lemmas (closed form, optional brute force)")
    s.add_argument("--c", required=True, help="real in (0,1), e.g. inv:phi")
    s.add_argument("--d")
    s.add_argument("--k", type=_nonneg)
    s.add_argument("--t", required=True, help="cutoff (rational like 43/2, or a real spec)")
    s.add_argument("--indicator", action="store_true", help="shifted indicator sum of --c up to --t")
    s.add_argument("--verify", action="store_true")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("series", help="evaluate a series")
    s.add_argument("--kind", choices=SERIES_KINDS, required=True)
    s.add_argument("--a")
    s.add_argument("--b")
    s.add_argument("--c")
    s.add_argument("--k", type=_positive, default=1)
    s.add_argument("--m", type=_positive, default=100)
    s.add_argument("--N", type=_positive, default=10**5)
    s.add_argument("--num-off", type=_nonneg, default=0)
    s.add_argument("--den-off-a", type=_nonneg, default=1)
    s.add_argument("--den-off-b", type=_nonneg, default=1)
    s.add_argument("--shift-k", type=_nonneg, default=0)
    s.add_argument("--variant", choices=("plain", "shifted"), default="plain")
    s.add_argument("--convention", choices=series.CONVENTIONS_T2, default="printed")
    s.add_argument("--gap", action="store_true", help="also report |s_2m - s_m|")
    s.add_argument("--oracle", action="store_true", help="cross-check against direct summation")
    s.set_defaults(func=cmd_series)

    s = sub.add_parser("verify", help="check an identity numerically")
    s.add_argument("--identity", choices=IDENTITIES, required=True)
    s.add_argument("--a", default="phi")
    s.add_argument("--b", default="phi2")
    s.add_argument("--c", default="phi")
    s.add_argument("--k", type=_nonneg, default=1)
    s.add_argument("--m", type=_positive, default=10**4)
    s.add_argument("--N", type=_positive, default=10**5)
    s.add_argument("--C", type=_positive, default=16)
    s.add_argument("--k-schedule", help="comma-separated increasing k values")
    s.add_argument("--convention", choices=series.CONVENTIONS_T2, default="printed")
    s.add_argument("--t4-convention", choices=series.CONVENTIONS_T4, default="consistent")
    s.add_argument("--reading", choices=series.READINGS, default="corrected")
    s.add_argument("--compare", action="store_true", help="also report the other index convention")
    s.add_argument("--oracle", action="store_true", help="cross-check the left side by direct summation")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan", help="conjecture scan over seeded random surd pairs")
    s.add_argument("--pairs", type=_positive, default=100)
    s.add_argument("--terms", type=_positive, default=10**6)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("reproduce-paper", help="recompute every published number")
    s.add_argument("--word-length", type=_positive, default=10**5)
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        ctx = PrecisionContext.for_target(args.precision)
        if args.command == "verify" and args.identity in ("theorem2",) and args.k < 1:
            raise UsageError("theorem2 needs k >= 1")
        if args.command == "verify" and args.identity == "theorem4" and args.k < 1:
            raise UsageError("theorem4 needs k >= 1")
        reports = args.func(args, ctx)
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except AmbiguousFloor as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (UsageError, InvalidSlope, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(reports, args.format))
    if args.command == "scan":
        return EXIT_OK
    return EXIT_FAIL if any(r["pass"] is False for r in reports) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
