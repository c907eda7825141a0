"""
A lazy geometric kernel
=======================

Constructions such as intersections and midpoints return lazy objects.
Their coordinates are interval boxes; the exact objects are built from the
recorded construction DAG only if a predicate needs them.
"""

from lazygeom import COUNTERS, live_lazy_nodes, make_lazy_kernel, update_exact
from lazygeom.lazy_kernel import widen_approximation

K = make_lazy_kernel()

s1 = K.segment(K.point(0.1, 0.1), K.point(0.9, 0.7))
s2 = K.segment(K.point(0.1, 0.8), K.point(0.7, 0.05))
a = K.intersect_segments(s1, s2).value

line = K.construct_line(K.point(0.0, 0.3), K.point(1.0, 0.6))
b = K.vertical_projection(K.point(0.3, 0.9), line)

m = K.construct_midpoint(a, b)
print("midpoint approximation:", m.at)
print("bbox without exact work:", K.bbox(m), COUNTERS.snapshot())

# degrade the approximations to force the exact path, as a stress test
for h in (a, b, m):
    widen_approximation(h)
print("collinear(a, m, b):", K.collinear(a, m, b))
print("exact ops, fallbacks:", COUNTERS.snapshot())
print("exact midpoint:", update_exact(m))

# pruning: once exact, a node forgets its arguments
before = live_lazy_nodes()
del a, b, s1, s2, line
print("live lazy nodes:", before, "->", live_lazy_nodes())
