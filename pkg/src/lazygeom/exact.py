"""Exact rational arithmetic.

The exact number type is :class:`fractions.Fraction`: Python integers are the
arbitrary-precision substrate and ``Fraction`` keeps every value reduced with
a positive denominator after each operation.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .interval import Interval

__all__ = [
    "BigRational",
    "format_rational",
    "parse_rational",
    "rat_add",
    "rat_div",
    "rat_from_double",
    "rat_mul",
    "rat_sign",
    "rat_sub",
    "rat_to_interval",
]

BigRational = Fraction

_next = math.nextafter
_INF = math.inf
_MAX = 1.7976931348623157e308


def rat_from_double(x: float) -> Fraction:
    """Exact value of a finite double (denominator is a power of two)."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r}")
    return Fraction(x)


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if not b:
        raise ZeroDivisionError("exact division by zero")
    return a / b


def rat_sign(a: Fraction) -> int:
    n = a.numerator
    return (n > 0) - (n < 0)


def rat_to_interval(q: Fraction) -> Interval:
    """Tightest double bracket of ``q``: a singleton or two adjacent doubles."""
    n = q.numerator
    d = q.denominator
    try:
        x = n / d  # correctly rounded int division
    except OverflowError:
        return Interval(_MAX, _INF) if n > 0 else Interval(-_INF, -_MAX)
    xn, xd = x.as_integer_ratio()
    if xn == n and xd == d:
        return Interval(x, x)
    # x is the nearest double; the exact value lies on one side of it
    if xn * d < n * xd:
        return Interval(x, _next(x, _INF))
    return Interval(_next(x, -_INF), x)


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"num/den"`` or ``"num"``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.groups()
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"
