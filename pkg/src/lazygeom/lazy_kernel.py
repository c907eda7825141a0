"""Lazy exact geometric objects and the kernel built on them.

A lazy object is a DAG node holding an interval approximation of a kernel
object, the exact construction that produced it and the lazy arguments it
was built from.  Predicates are filtered over the approximations; exact
objects are only built when a predicate cannot be decided.  After an exact
evaluation the node's approximation is refreshed from the exact object and
its argument slots are reset to shared default handles, so the subgraph
below it can be reclaimed.
"""

from __future__ import annotations

import math
from fractions import Fraction
from operator import attrgetter
from typing import Any, Callable

from .exact import rat_to_interval
from .filtered import PREDICATES, FilteredPredicate
from .instrument import COUNTERS
from .interval import Interval, UncertainComparison
from .kernel import (
    EMPTY,
    INTERVAL,
    RATIONAL,
    Bbox2,
    CartesianKernel,
    Intersection2,
    IntersectionKind,
    KernelConverter,
    Line2,
    Point2,
    Segment2,
)
from .lazy_number import DEFAULT_NUMBER, Lazy, LazyNumber, force_exact, ln_from_double

__all__ = [
    "LazyConstruct",
    "LazyIntersect",
    "LazyKernel",
    "LazyLine",
    "LazyObject",
    "LazyPoint",
    "LazySegment",
    "approx",
    "default_handle",
    "lazy_bbox",
    "lazy_construct",
    "make_lazy_kernel",
    "update_exact",
    "widen_approximation",
]

approx_kernel = CartesianKernel(INTERVAL)
exact_kernel = CartesianKernel(RATIONAL)

#: exact kernel object -> interval kernel object
e2a = KernelConverter(rat_to_interval)


class LazyObject(Lazy):
    """Handle and node in one: Python references do the reference counting."""

    __slots__ = ("ec", "args")

    def __init__(self, at, et=None, ec: Callable | None = None, args: tuple = ()):
        self.at = at
        self.et = et
        self.ec = ec
        self.args = args

    def __repr__(self) -> str:
        state = "exact" if self.et is not None else f"pending/{len(self.args)}"
        return f"{type(self).__name__}({self.at!r}, {state})"

    def children(self) -> tuple:
        return self.args

    @property
    def outdegree(self) -> int:
        return len(self.args)

    def _compute(self) -> None:
        et = self.ec(*[a.et for a in self.args])
        COUNTERS.exact_ops += 1
        self.et = et
        self.at = e2a(et)
        self.args = tuple([_DEFAULTS[a.__class__] for a in self.args])


class LazyPoint(LazyObject):
    __slots__ = ()


class LazySegment(LazyObject):
    __slots__ = ()


class LazyLine(LazyObject):
    __slots__ = ()


# approximate/exact kernel object type -> lazy handle type
LAZY_TYPE: dict[type, type] = {Point2: LazyPoint, Segment2: LazySegment, Line2: LazyLine}


def make_leaf(et) -> LazyObject:
    return LAZY_TYPE[et.__class__](e2a(et), et)


def _point_leaf(x: float, y: float) -> LazyPoint:
    return LazyPoint(
        Point2(Interval(x, x), Interval(y, y)), Point2(Fraction(x), Fraction(y))
    )


_ZERO = Fraction(0)
_DEFAULTS: dict[type, Lazy] = {
    LazyNumber: DEFAULT_NUMBER,
    LazyPoint: make_leaf(Point2(_ZERO, _ZERO)),
    LazySegment: make_leaf(Segment2(Point2(_ZERO, _ZERO), Point2(_ZERO, _ZERO))),
    LazyLine: make_leaf(Line2(_ZERO, Fraction(1), _ZERO)),
}


def default_handle(kind: type) -> Lazy:
    """The shared node every default handle of ``kind`` points to."""
    return _DEFAULTS[kind]


def approx(h: Lazy):
    """Stored approximation; never triggers exact computation."""
    return h.at


def update_exact(h: Lazy):
    """Exact object of ``h``, computing and caching it if needed."""
    return force_exact(h)


def lazy_construct(ec: Callable, ac: Callable, *args):
    """Build a construction node, or an exact leaf if ``ac`` is undecided."""
    try:
        at = ac(*[a.at for a in args])
    except UncertainComparison:
        COUNTERS.fallbacks += 1
        COUNTERS.exact_ops += 1
        return make_leaf(ec(*[force_exact(a) for a in args]))
    return LAZY_TYPE[at.__class__](at, None, ec, args)


class LazyConstruct:
    """Lazy version of one construction functor."""

    __slots__ = ("ec", "ac")

    def __init__(self, ec: Callable, ac: Callable):
        self.ec = ec
        self.ac = ac

    def __call__(self, *args):
        return lazy_construct(self.ec, self.ac, *args)


class LazyIntersect:
    """Segment intersection returning a variant that holds a lazy object.

    The arm is chosen from the approximate intersection when it is decided,
    otherwise from the exact one; the object in the arm is lazy either way.
    """

    def __init__(self, ec: Callable, ac: Callable):
        self.ec = ec
        self.ac = ac
        self._arms = {
            IntersectionKind.POINT: _ArmExtractor(ec, IntersectionKind.POINT),
            IntersectionKind.SEGMENT: _ArmExtractor(ec, IntersectionKind.SEGMENT),
        }

    def __call__(self, s1: LazySegment, s2: LazySegment) -> Intersection2:
        try:
            ai = self.ac(s1.at, s2.at)
        except UncertainComparison:
            COUNTERS.fallbacks += 1
            COUNTERS.exact_ops += 1
            ei = self.ec(force_exact(s1), force_exact(s2))
            if ei.value is None:
                return EMPTY
            return Intersection2(ei.kind, make_leaf(ei.value))
        value = ai.value
        if value is None:
            return EMPTY
        node = LAZY_TYPE[value.__class__](value, None, self._arms[ai.kind], (s1, s2))
        return Intersection2(ai.kind, node)


class _ArmExtractor:
    __slots__ = ("ec", "kind")

    def __init__(self, ec, kind):
        self.ec = ec
        self.kind = kind

    def __call__(self, e1, e2):
        result = self.ec(e1, e2)
        if result.kind is not self.kind:
            raise AssertionError(f"exact intersection is {result.kind}, approximation said {self.kind}")
        return result.value


def lazy_bbox(h: LazyObject) -> Bbox2:
    """Bounding box straight from the interval approximation."""
    return approx_kernel.bbox(h.at)


def widen_approximation(h: Lazy, ulps: int = 1 << 20) -> None:
    """Debug hook: degrade the stored approximation of ``h``.

    Each interval is widened outward by ``ulps`` units in the last place of
    its larger-magnitude bound.  Containment is preserved, so results stay
    exact, but the filter fails far more often.
    """
    h.at = KernelConverter(lambda iv: _widen(iv, ulps))(h.at)


def _widen(iv: Interval, ulps: int) -> Interval:
    pad = ulps * math.ulp(max(abs(iv.inf), abs(iv.sup)))
    lo = math.nextafter(iv.inf - pad, -math.inf)
    hi = math.nextafter(iv.sup + pad, math.inf)
    return Interval(lo, hi)


_approx_of = attrgetter("at")

CONSTRUCTIONS = (
    "construct_point",
    "construct_segment",
    "construct_line",
    "construct_midpoint",
    "construct_circumcenter",
    "vertical_projection",
)


class LazyKernel:
    """Lazy kernel over an interval kernel and a rational kernel.

    Predicates are :class:`FilteredPredicate` instances; constructions are
    :class:`LazyConstruct` adaptors; ``intersect_segments`` and ``bbox`` are
    the special cases.
    """

    def __init__(self, ak: CartesianKernel = approx_kernel, ek: CartesianKernel = exact_kernel):
        self.approx_kernel = ak
        self.exact_kernel = ek
        self.c2a = _approx_of
        self.c2e = force_exact
        self.e2a = e2a
        self.predicates: dict[str, FilteredPredicate] = {}
        for name in PREDICATES:
            pred = FilteredPredicate(getattr(ek, name), getattr(ak, name), force_exact, _approx_of)
            self.predicates[name] = pred
            setattr(self, name, pred)
        for name in CONSTRUCTIONS:
            setattr(self, name, LazyConstruct(getattr(ek, name), getattr(ak, name)))
        self.intersect_segments = LazyIntersect(ek.intersect_segments, ak.intersect_segments)
        self.bbox = lazy_bbox

    def __repr__(self) -> str:
        return "LazyKernel(interval, rational)"

    # leaves

    def point(self, x: float, y: float) -> LazyPoint:
        return _point_leaf(float(x), float(y))

    def segment(self, p: LazyPoint, q: LazyPoint) -> LazySegment:
        return self.construct_segment(p, q)

    def line(self, a: float, b: float, c: float) -> LazyLine:
        return make_leaf(Line2(Fraction(a), Fraction(b), Fraction(c)))

    def number(self, x: float) -> LazyNumber:
        return ln_from_double(x)

    def from_exact(self, obj: Any) -> LazyObject:
        return make_leaf(obj)

    def failure_counters(self) -> dict[str, dict[str, int]]:
        return {name: p.failure_counters() for name, p in self.predicates.items()}


def make_lazy_kernel() -> LazyKernel:
    return LazyKernel()
