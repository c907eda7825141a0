"""
When floating point gets orientation wrong
==========================================

Three points on the line y = x, with the first nudged by multiples of 2^-53.
Plain doubles report turns that are not there; the filtered kernel gets the
exact answer and only pays for exact arithmetic on the hard cases.
"""

from lazygeom import DOUBLE, CartesianKernel, Point2, make_filtered_kernel

naive = CartesianKernel(DOUBLE)
robust = make_filtered_kernel()

u = 2.0**-53
q, r = Point2(12.0, 12.0), Point2(24.0, 24.0)

symbol = {-1: "-", 0: "0", 1: "+"}
print("rows: x offset, columns: y offset (units of 2^-53); naive | filtered")
for i in range(0, 12, 2):
    row_naive, row_exact = [], []
    for j in range(0, 12, 2):
        p = Point2(0.5 + i * u, 0.5 + j * u)
        row_naive.append(symbol[int(naive.orientation(p, q, r))])
        row_exact.append(symbol[int(robust.orientation(p, q, r))])
    print(" ".join(row_naive), " | ", " ".join(row_exact))

# how much exact work did the filter need?
print(robust.failure_counters()["orientation"])
