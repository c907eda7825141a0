"""
Lazy exact numbers
==================

Arithmetic records a DAG and an interval. The exact rational is computed
only when a comparison cannot be settled by the intervals.
"""

from lazygeom import COUNTERS, ln_from_double
from lazygeom.lazy_number import ln_exact

a, b, c = ln_from_double(0.1), ln_from_double(0.2), ln_from_double(0.3)

s = a + b
print("0.1 + 0.2 > 0.3 ?", s > c, "  exact ops so far:", COUNTERS.exact_ops)

one, three = ln_from_double(1.0), ln_from_double(3.0)
z = (one / three) * three - one
print("interval of (1/3)*3 - 1:", z.at)
print("is it zero?", z == 0, "  exact ops now:", COUNTERS.exact_ops)
print("exact value:", ln_exact(z), " interval after refresh:", z.at)

# deep DAGs are fine: evaluation does not recurse
x = ln_from_double(0.5)
for _ in range(50_000):
    x = x + one
print("after 50000 additions:", ln_exact(x))
