"""Interval arithmetic over binary64 with outward widening.

Each bound is computed in the default round-to-nearest mode and then moved
one representable step outward, which keeps the exact real result inside the
interval without touching the FPU rounding mode.  A bound that is exactly
zero because of a zero operand (or a cancelling sum) is left as is, so
products and sums of exact zeros stay decidable.

Comparisons are three-valued plus ``UNCERTAIN``.  Code that needs a decided
answer calls :func:`certain_sign` / :func:`certain_compare`, which raise
:class:`UncertainComparison` -- the signal the filtered and lazy layers catch
to fall back to exact arithmetic.
"""

from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction

__all__ = [
    "Certainty",
    "Interval",
    "UncertainComparison",
    "certain_compare",
    "certain_sign",
    "iv_add",
    "iv_compare",
    "iv_div",
    "iv_from_double",
    "iv_mul",
    "iv_neg",
    "iv_sign",
    "iv_sub",
]

_next = math.nextafter
_INF = math.inf


class UncertainComparison(ArithmeticError):
    """Raised when interval bounds cannot decide a sign or an ordering."""


class Certainty(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1
    UNCERTAIN = 2


NEGATIVE = Certainty.NEGATIVE
ZERO = Certainty.ZERO
POSITIVE = Certainty.POSITIVE
UNCERTAIN = Certainty.UNCERTAIN


class Interval:
    """Closed interval ``[inf, sup]`` of binary64 bounds.

    Instances are treated as immutable values.  ``==`` is structural (same
    bounds); ordering questions go through :func:`iv_compare`.
    """

    __slots__ = ("inf", "sup")

    def __init__(self, inf: float, sup: float | None = None):
        if sup is None:
            sup = inf
        # a NaN bound fails this test too
        if not inf <= sup:
            raise ValueError(f"invalid interval bounds [{inf!r}, {sup!r}]")
        self.inf = inf
        self.sup = sup

    def __repr__(self) -> str:
        return f"Interval({self.inf!r}, {self.sup!r})"

    def __eq__(self, other):
        if other.__class__ is not Interval:
            return NotImplemented
        return self.inf == other.inf and self.sup == other.sup

    def __hash__(self):
        return hash((self.inf, self.sup))

    @property
    def width(self) -> float:
        return self.sup - self.inf

    def is_point(self) -> bool:
        return self.inf == self.sup

    def __contains__(self, value) -> bool:
        """Exact membership test for floats, ints and Fractions."""
        return self.inf <= value <= self.sup

    def __add__(self, other):
        if other.__class__ is not Interval:
            other = _coerce(other)
        lo = self.inf + other.inf
        hi = self.sup + other.sup
        # a sum that rounds to zero is exact
        return Interval(_next(lo, -_INF) if lo else lo, _next(hi, _INF) if hi else hi)

    __radd__ = __add__

    def __sub__(self, other):
        if other.__class__ is not Interval:
            other = _coerce(other)
        lo = self.inf - other.sup
        hi = self.sup - other.inf
        return Interval(_next(lo, -_INF) if lo else lo, _next(hi, _INF) if hi else hi)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __neg__(self):
        return Interval(-self.sup, -self.inf)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if other.__class__ is not Interval:
            other = _coerce(other)
        a, b = self.inf, self.sup
        c, d = other.inf, other.sup
        # pick the factor pairs that produce each bound
        if a >= 0:
            if c >= 0:
                lu, lv, hu, hv = a, c, b, d
            elif d <= 0:
                lu, lv, hu, hv = b, c, a, d
            else:
                lu, lv, hu, hv = b, c, b, d
        elif b <= 0:
            if c >= 0:
                lu, lv, hu, hv = a, d, b, c
            elif d <= 0:
                lu, lv, hu, hv = b, d, a, c
            else:
                lu, lv, hu, hv = a, d, a, c
        elif c >= 0:
            lu, lv, hu, hv = a, d, b, d
        elif d <= 0:
            lu, lv, hu, hv = b, c, a, c
        else:
            if a * d < b * c:
                lu, lv = a, d
            else:
                lu, lv = b, c
            if a * c > b * d:
                hu, hv = a, c
            else:
                hu, hv = b, d
        lo = lu * lv
        hi = hu * hv
        # 0 * inf: the infinite bound stands for a finite real, product is 0
        if lo != lo:
            lo = 0.0
        elif lo or (lu and lv):
            lo = _next(lo, -_INF)
        if hi != hi:
            hi = 0.0
        elif hi or (hu and hv):
            hi = _next(hi, _INF)
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if other.__class__ is not Interval:
            other = _coerce(other)
        a, b = self.inf, self.sup
        c, d = other.inf, other.sup
        if c > 0:
            if a >= 0:
                ln, ld, hn, hd = a, d, b, c
            elif b <= 0:
                ln, ld, hn, hd = a, c, b, d
            else:
                ln, ld, hn, hd = a, c, b, c
        elif d < 0:
            if a >= 0:
                ln, ld, hn, hd = b, d, a, c
            elif b <= 0:
                ln, ld, hn, hd = b, c, a, d
            else:
                ln, ld, hn, hd = b, d, a, d
        else:
            raise UncertainComparison("division by an interval containing zero")
        lo = ln / ld
        hi = hn / hd
        if lo != lo:
            lo = -_INF
        elif lo or ln:
            lo = _next(lo, -_INF)
        if hi != hi:
            hi = _INF
        elif hi or hn:
            hi = _next(hi, _INF)
        return Interval(lo, hi)

    def __rtruediv__(self, other):
        return _coerce(other) / self


def _coerce(value) -> Interval:
    if isinstance(value, float):
        return iv_from_double(value)
    if isinstance(value, int):
        f = float(value)
        if f == value:
            return Interval(f, f)
        return _bracket(Fraction(value))
    if isinstance(value, Fraction):
        return _bracket(value)
    raise TypeError(f"cannot convert {type(value).__name__} to Interval")


def _bracket(q: Fraction) -> Interval:
    from .exact import rat_to_interval

    return rat_to_interval(q)


def iv_from_double(x: float) -> Interval:
    """Degenerate interval ``[x, x]``; a finite double is its own exact value."""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r}")
    return Interval(x, x)


def iv_add(a: Interval, b: Interval) -> Interval:
    return a + b


def iv_sub(a: Interval, b: Interval) -> Interval:
    return a - b


def iv_mul(a: Interval, b: Interval) -> Interval:
    return a * b


def iv_div(a: Interval, b: Interval) -> Interval:
    """Quotient interval; raises :class:`UncertainComparison` if ``0 in b``."""
    return a / b


def iv_neg(a: Interval) -> Interval:
    return -a


def iv_sign(a: Interval) -> Certainty:
    if a.inf > 0:
        return POSITIVE
    if a.sup < 0:
        return NEGATIVE
    if a.inf == 0 and a.sup == 0:
        return ZERO
    return UNCERTAIN


def iv_compare(a: Interval, b: Interval) -> Certainty:
    """Order of two intervals.

    Touching intervals (``a.sup == b.inf``) are ``UNCERTAIN`` unless both
    are the same singleton.
    """
    if a.sup < b.inf:
        return NEGATIVE
    if a.inf > b.sup:
        return POSITIVE
    if a.inf == a.sup == b.inf == b.sup:
        return ZERO
    return UNCERTAIN


def certain_sign(a: Interval) -> int:
    """Sign as -1/0/+1, raising :class:`UncertainComparison` when undecided."""
    if a.inf > 0:
        return 1
    if a.sup < 0:
        return -1
    if a.inf == 0 and a.sup == 0:
        return 0
    raise UncertainComparison("interval sign is undecided")


def certain_compare(a: Interval, b: Interval) -> int:
    c = iv_compare(a, b)
    if c is UNCERTAIN:
        raise UncertainComparison("interval comparison is undecided")
    return int(c)
