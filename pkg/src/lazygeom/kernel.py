"""Cartesian 2D kernel generic over the number type.

Objects are plain named tuples whose coordinates are of the kernel's number
type.  A :class:`CartesianKernel` bundles predicates and constructions for
one :class:`NumberType`; the same code runs over doubles, intervals,
rationals and lazy numbers.  Under the interval instantiation every
undecided branch raises :class:`~lazygeom.interval.UncertainComparison`
instead of picking a side.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from typing import Any, Callable, NamedTuple

from .exact import rat_from_double, rat_sign, rat_to_interval
from .interval import Interval, certain_compare, certain_sign, iv_from_double

__all__ = [
    "Bbox2",
    "CartesianKernel",
    "DOUBLE",
    "EMPTY",
    "INTERVAL",
    "Intersection2",
    "IntersectionKind",
    "KernelConverter",
    "Line2",
    "NumberType",
    "Orientation",
    "Point2",
    "RATIONAL",
    "Segment2",
]


class Point2(NamedTuple):
    x: Any
    y: Any


class Segment2(NamedTuple):
    source: Point2
    target: Point2


class Line2(NamedTuple):
    """The line ``a*x + b*y + c = 0``."""

    a: Any
    b: Any
    c: Any


class Bbox2(NamedTuple):
    xmin: float
    ymin: float
    xmax: float
    ymax: float

    def union(self, other: Bbox2) -> Bbox2:
        return Bbox2(
            min(self.xmin, other.xmin),
            min(self.ymin, other.ymin),
            max(self.xmax, other.xmax),
            max(self.ymax, other.ymax),
        )

    def overlaps(self, other: Bbox2) -> bool:
        return (
            self.xmin <= other.xmax
            and other.xmin <= self.xmax
            and self.ymin <= other.ymax
            and other.ymin <= self.ymax
        )


class Orientation(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1

    RIGHT_TURN = -1
    COLLINEAR = 0
    LEFT_TURN = 1


# indexed by a sign in {-1, 0, 1}
_ORIENTATIONS = (Orientation.ZERO, Orientation.POSITIVE, Orientation.NEGATIVE)


class IntersectionKind(Enum):
    EMPTY = "empty"
    POINT = "point"
    SEGMENT = "segment"


class Intersection2(NamedTuple):
    """Closed variant: ``value`` is None, a point or a segment per ``kind``."""

    kind: IntersectionKind
    value: Any = None


EMPTY = Intersection2(IntersectionKind.EMPTY)


@dataclass(frozen=True)
class NumberType:
    """What the kernel needs to know about a number type.

    ``sign`` and ``compare`` return -1/0/+1 and may raise
    ``UncertainComparison`` for approximate types.  ``bounds`` returns a
    pair of doubles enclosing the value.
    """

    name: str
    from_double: Callable[[float], Any]
    sign: Callable[[Any], int]
    compare: Callable[[Any, Any], int]
    bounds: Callable[[Any], tuple]


def _cmp(a, b) -> int:
    return (a > b) - (a < b)


def _float_sign(x: float) -> int:
    return (x > 0) - (x < 0)


def _rat_bounds(q: Fraction) -> tuple:
    iv = rat_to_interval(q)
    return iv.inf, iv.sup


DOUBLE = NumberType("double", float, _float_sign, _cmp, lambda x: (x, x))
RATIONAL = NumberType("rational", rat_from_double, rat_sign, _cmp, _rat_bounds)
INTERVAL = NumberType(
    "interval", iv_from_double, certain_sign, certain_compare, lambda i: (i.inf, i.sup)
)


class CartesianKernel:
    """Predicates and constructions over one number type."""

    def __init__(self, nt: NumberType):
        self.nt = nt
        self._sign = nt.sign
        self._compare = nt.compare
        self._two = nt.from_double(2.0)

    def __repr__(self) -> str:
        return f"CartesianKernel({self.nt.name})"

    # -- object creation from doubles ------------------------------------

    def point(self, x: float, y: float) -> Point2:
        f = self.nt.from_double
        return Point2(f(x), f(y))

    def segment(self, p: Point2, q: Point2) -> Segment2:
        return Segment2(p, q)

    def line(self, a: float, b: float, c: float) -> Line2:
        f = self.nt.from_double
        return Line2(f(a), f(b), f(c))

    # -- predicates --------------------------------------------------------

    def orientation(self, p: Point2, q: Point2, r: Point2) -> Orientation:
        px, py = p
        det = (q.x - px) * (r.y - py) - (r.x - px) * (q.y - py)
        return _ORIENTATIONS[self._sign(det)]

    def collinear(self, p: Point2, q: Point2, r: Point2) -> bool:
        return self.orientation(p, q, r) == 0

    def compare_x(self, p: Point2, q: Point2) -> int:
        return self._compare(p.x, q.x)

    def compare_y(self, p: Point2, q: Point2) -> int:
        return self._compare(p.y, q.y)

    def compare_xy(self, p: Point2, q: Point2) -> int:
        c = self._compare(p.x, q.x)
        if c:
            return c
        return self._compare(p.y, q.y)

    def side_of_oriented_circle(self, p: Point2, q: Point2, r: Point2, t: Point2) -> int:
        """+1 if ``t`` is left of the oriented circle through p, q, r.

        For a counterclockwise triple that means inside; 0 on the circle.
        """
        px, py = p
        qx = q.x - px
        qy = q.y - py
        rx = r.x - px
        ry = r.y - py
        tx = t.x - px
        ty = t.y - py
        q2 = qx * qx + qy * qy
        r2 = rx * rx + ry * ry
        t2 = tx * tx + ty * ty
        det = qx * (ry * t2 - r2 * ty) - qy * (rx * t2 - r2 * tx) + q2 * (rx * ty - ry * tx)
        return -self._sign(det)

    # -- constructions -----------------------------------------------------

    def construct_point(self, x, y) -> Point2:
        return Point2(x, y)

    def construct_segment(self, p: Point2, q: Point2) -> Segment2:
        return Segment2(p, q)

    def construct_line(self, p: Point2, q: Point2) -> Line2:
        """Line through p and q, oriented from p to q."""
        if self.compare_xy(p, q) == 0:
            raise ValueError("line through two equal points")
        return Line2(p.y - q.y, q.x - p.x, p.x * q.y - p.y * q.x)

    def construct_midpoint(self, p: Point2, q: Point2) -> Point2:
        two = self._two
        return Point2((p.x + q.x) / two, (p.y + q.y) / two)

    def construct_circumcenter(self, p: Point2, q: Point2, r: Point2) -> Point2:
        px, py = p
        qx = q.x - px
        qy = q.y - py
        rx = r.x - px
        ry = r.y - py
        den = (qx * ry - qy * rx) * self._two
        if self._sign(den) == 0:
            raise ValueError("circumcenter of collinear points")
        q2 = qx * qx + qy * qy
        r2 = rx * rx + ry * ry
        return Point2(px + (ry * q2 - qy * r2) / den, py + (qx * r2 - rx * q2) / den)

    def vertical_projection(self, p: Point2, line: Line2) -> Point2:
        """Point of ``line`` with the same x-coordinate as ``p``."""
        a, b, c = line
        if self._sign(b) == 0:
            raise ValueError("vertical projection onto a vertical line")
        return Point2(p.x, -(a * p.x + c) / b)

    def intersect_segments(self, s1: Segment2, s2: Segment2) -> Intersection2:
        p, q = s1
        r, s = s2
        o1 = self.orientation(p, q, r)
        o2 = self.orientation(p, q, s)
        if o1 == o2 and o1 != 0:
            return EMPTY
        o3 = self.orientation(r, s, p)
        o4 = self.orientation(r, s, q)
        if o3 == o4 and o3 != 0:
            return EMPTY
        if o1 == 0 and o2 == 0:
            return self._collinear_overlap(p, q, r, s)
        # a single crossing point; reuse an endpoint when it lies on the other segment
        if o1 == 0:
            return Intersection2(IntersectionKind.POINT, r)
        if o2 == 0:
            return Intersection2(IntersectionKind.POINT, s)
        if o3 == 0:
            return Intersection2(IntersectionKind.POINT, p)
        if o4 == 0:
            return Intersection2(IntersectionKind.POINT, q)
        dx = q.x - p.x
        dy = q.y - p.y
        ex = s.x - r.x
        ey = s.y - r.y
        den = dx * ey - dy * ex
        t = ((r.x - p.x) * ey - (r.y - p.y) * ex) / den
        return Intersection2(IntersectionKind.POINT, Point2(p.x + t * dx, p.y + t * dy))

    def _collinear_overlap(self, p, q, r, s) -> Intersection2:
        cmp = self.compare_xy
        a1, b1 = (p, q) if cmp(p, q) <= 0 else (q, p)
        a2, b2 = (r, s) if cmp(r, s) <= 0 else (s, r)
        lo = a1 if cmp(a1, a2) >= 0 else a2
        hi = b1 if cmp(b1, b2) <= 0 else b2
        c = cmp(lo, hi)
        if c > 0:
            return EMPTY
        if c == 0:
            return Intersection2(IntersectionKind.POINT, lo)
        return Intersection2(IntersectionKind.SEGMENT, Segment2(lo, hi))

    def bbox(self, obj) -> Bbox2:
        """Double box enclosing a point or segment, rounded outward."""
        if isinstance(obj, Segment2):
            return self.bbox(obj.source).union(self.bbox(obj.target))
        xlo, xhi = self.nt.bounds(obj.x)
        ylo, yhi = self.nt.bounds(obj.y)
        return Bbox2(xlo, ylo, xhi, yhi)


class KernelConverter:
    """Maps kernel objects coordinate-wise through a number conversion.

    The object kind is preserved: points map to points, segments to
    segments, intersection results arm by arm.  Anything else is treated as
    a bare number.
    """

    def __init__(self, number_conversion: Callable[[Any], Any]):
        self.cv = number_conversion

    def __call__(self, obj):
        cv = self.cv
        cls = obj.__class__
        if cls is Point2:
            return Point2(cv(obj.x), cv(obj.y))
        if cls is Segment2:
            s, t = obj
            return Segment2(Point2(cv(s.x), cv(s.y)), Point2(cv(t.x), cv(t.y)))
        if cls is Line2:
            return Line2(cv(obj.a), cv(obj.b), cv(obj.c))
        if cls is Intersection2:
            if obj.value is None:
                return obj
            return Intersection2(obj.kind, self(obj.value))
        if cls is Bbox2:
            return obj
        return cv(obj)


def interval_of(x) -> Interval:
    """Number conversion used to build approximate kernels from any exact input."""
    if isinstance(x, Interval):
        return x
    if isinstance(x, Fraction):
        return rat_to_interval(x)
    return iv_from_double(x)


to_interval = KernelConverter(interval_of)
to_rational = KernelConverter(rat_from_double)
