"""
Interval arithmetic as a certified filter
=========================================

Every operation rounds its bounds outward, so the exact result of the
real-number expression always lies inside. A sign is either decided or the
comparison reports that it cannot tell.
"""

from fractions import Fraction

from lazygeom import Interval, UncertainComparison, iv_sign
from lazygeom.interval import certain_sign

third = Interval(1.0) / Interval(3.0)
print("1/3 in", third, "contains 1/3:", Fraction(1, 3) in third)

x = third * Interval(3.0) - Interval(1.0)
print("(1/3)*3 - 1 in", x, "->", iv_sign(x).name)

try:
    certain_sign(x)
except UncertainComparison as exc:
    print("undecided:", exc)

# a clear case is decided without any exact arithmetic
print(iv_sign(Interval(0.1) + Interval(0.2) - Interval(0.25)).name)
