"""Exact Beatty sequences, Sturmian words and a logarithm identity for
Beatty ratios, with certified numerics and independent oracles."""

from .arith import (
    DecimalLiteral,
    PrecisionContext,
    QuadraticSurd,
    compare,
    floor_mul,
    frac_mul,
    parse_real,
    parse_slope,
    phi,
    phi2,
    reciprocal,
)
from .errors import AmbiguousFloor, BeattyLabError, InvalidSlope, PrecisionExhausted

__all__ = [
    "AmbiguousFloor",
    "BeattyLabError",
    "DecimalLiteral",
    "InvalidSlope",
    "PrecisionContext",
    "PrecisionExhausted",
    "QuadraticSurd",
    "compare",
    "floor_mul",
    "frac_mul",
    "parse_real",
    "parse_slope",
    "phi",
    "phi2",
    "reciprocal",
]
__version__ = "0.1.0"
