"""
The segment benchmark across kernels
====================================

Random segments, all-pairs intersection, shuffled orientation tests over the
intersection points. The lazy kernel should beat the lazy number type on
time and memory, and the exact kernel on time.
"""

from lazygeom.bench import BenchConfig, run_benchmark

for kernel in ("double", "lazy-kernel", "lazy-number", "exact"):
    r = run_benchmark(BenchConfig(kernel, segments=200, seed=1), measure_memory=kernel != "exact")
    mem = f"{r.peak_bytes >> 10} KB" if r.peak_bytes is not None else "-"
    print(
        f"{kernel:12s} {r.seconds:6.2f}s {mem:>10s}  points={r.intersections}"
        f"  (-)={r.orient_neg} (+)={r.orient_pos} (0)={r.orient_zero}"
    )
