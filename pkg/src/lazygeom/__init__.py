"""Lazy exact geometric computation.

Predicates and constructions run on interval approximations and fall back to
exact rational arithmetic, replayed from a recorded DAG, only when the
intervals cannot decide.
"""

from .exact import BigRational, rat_from_double, rat_sign, rat_to_interval
from .filtered import FilteredKernel, FilteredPredicate, make_filtered_kernel
from .instrument import COUNTERS, live_lazy_nodes
from .interval import Certainty, Interval, UncertainComparison, iv_compare, iv_from_double, iv_sign
from .kernel import (
    DOUBLE,
    EMPTY,
    INTERVAL,
    RATIONAL,
    Bbox2,
    CartesianKernel,
    Intersection2,
    IntersectionKind,
    KernelConverter,
    Line2,
    NumberType,
    Orientation,
    Point2,
    Segment2,
)
from .lazy_kernel import (
    LazyKernel,
    LazyLine,
    LazyObject,
    LazyPoint,
    LazySegment,
    approx,
    default_handle,
    make_lazy_kernel,
    update_exact,
)
from .lazy_number import LAZY, LazyNumber, force_exact, ln_exact, ln_from_double, ln_from_rational

__all__ = [
    "Bbox2",
    "BigRational",
    "COUNTERS",
    "CartesianKernel",
    "Certainty",
    "DOUBLE",
    "EMPTY",
    "FilteredKernel",
    "FilteredPredicate",
    "INTERVAL",
    "Intersection2",
    "IntersectionKind",
    "Interval",
    "KernelConverter",
    "LAZY",
    "LazyKernel",
    "LazyLine",
    "LazyNumber",
    "LazyObject",
    "LazyPoint",
    "LazySegment",
    "Line2",
    "NumberType",
    "Orientation",
    "Point2",
    "RATIONAL",
    "Segment2",
    "UncertainComparison",
    "approx",
    "default_handle",
    "force_exact",
    "iv_compare",
    "iv_from_double",
    "iv_sign",
    "live_lazy_nodes",
    "ln_exact",
    "ln_from_double",
    "ln_from_rational",
    "make_filtered_kernel",
    "make_lazy_kernel",
    "rat_from_double",
    "rat_sign",
    "rat_to_interval",
    "update_exact",
]

__version__ = "0.1.0"
