"""Segment-intersection benchmark across kernel configurations.

Pipeline: random segments from a drand48 stream, brute-force all-pairs
intersection keeping point results, a seeded shuffle of the points, then
orientation of every consecutive triple.

    python -m lazygeom.bench --kernel lazy-kernel --segments 500 --seed 1 --json
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import tracemalloc
from dataclasses import asdict, dataclass

from .instrument import COUNTERS
from .kernel import DOUBLE, RATIONAL, CartesianKernel, IntersectionKind
from .lazy_kernel import make_lazy_kernel
from .lazy_number import LAZY

KERNELS = ("exact", "lazy-number", "lazy-kernel", "double")

_MASK48 = (1 << 48) - 1
_A = 0x5DEECE66D
_C = 0xB
_SCALE = 1.0 / (1 << 48)


def drand48_next(state: int) -> tuple[float, int]:
    """One step of the 48-bit drand48 LCG: ``(value, new_state)``."""
    state = (_A * state + _C) & _MASK48
    return state * _SCALE, state


class Drand48:
    """Stateful drand48 stream; the seed is the raw 48-bit state."""

    def __init__(self, seed: int = 0):
        self.state = seed & _MASK48

    def __call__(self) -> float:
        self.state = (_A * self.state + _C) & _MASK48
        return self.state * _SCALE

    def randbelow(self, n: int) -> int:
        return min(int(self() * n), n - 1)

    def shuffle(self, items: list) -> None:
        """Fisher-Yates, in place."""
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class BenchConfig:
    kernel: str = "lazy-kernel"
    segments: int = 2000
    seed: int = 0
    shuffle: bool = True

    def __post_init__(self):
        if self.kernel not in KERNELS:
            raise ValueError(f"unknown kernel {self.kernel!r}; expected one of {KERNELS}")
        if self.segments < 3:
            raise ValueError("need at least 3 segments")


@dataclass
class BenchReport:
    kernel: str
    segments: int
    seed: int
    intersections: int
    orient_neg: int
    orient_pos: int
    orient_zero: int
    seconds: float
    peak_bytes: int | None
    exact_fallbacks: int | None

    def counts(self) -> tuple[int, int, int, int]:
        return self.intersections, self.orient_neg, self.orient_pos, self.orient_zero


class BenchmarkError(RuntimeError):
    pass


def make_kernel(name: str):
    if name == "exact":
        return CartesianKernel(RATIONAL)
    if name == "lazy-number":
        return CartesianKernel(LAZY)
    if name == "lazy-kernel":
        return make_lazy_kernel()
    if name == "double":
        return CartesianKernel(DOUBLE)
    raise ValueError(f"unknown kernel {name!r}")


def _pipeline(cfg: BenchConfig, log=None) -> tuple[int, int, int, int]:
    kernel = make_kernel(cfg.kernel)
    rng = Drand48(cfg.seed)
    n = cfg.segments
    if log:
        log(f"Generating initial random segments: {n}")
    point = kernel.point
    segment = kernel.segment
    segments = []
    for _ in range(n):
        p = point(rng(), rng())
        q = point(rng(), rng())
        segments.append(segment(p, q))

    if log:
        log("Counting intersections [brute force algorithm]: ", end="")
    intersect = kernel.intersect_segments
    POINT = IntersectionKind.POINT
    points = []
    append = points.append
    for i in range(n - 1):
        si = segments[i]
        for j in range(i + 1, n):
            kind, value = intersect(si, segments[j])
            if kind is POINT:
                append(value)
    if log:
        log(str(len(points)))
    if len(points) < 3:
        raise BenchmarkError(f"only {len(points)} intersection points; need at least 3")

    # consecutive points often come from the same segment, hence filter failures
    if cfg.shuffle:
        rng.shuffle(points)

    if log:
        log("Performing orientation tests")
    orientation = kernel.orientation
    neg = pos = zero = 0
    for i in range(len(points) - 2):
        o = orientation(points[i], points[i + 1], points[i + 2])
        if o < 0:
            neg += 1
        elif o > 0:
            pos += 1
        else:
            zero += 1
    if log:
        log(f"orientation results : (-) = {neg}    (+) = {pos}    (0) = {zero}")
    return len(points), neg, pos, zero


def run_benchmark(cfg: BenchConfig, measure_memory: bool = True, log=None) -> BenchReport:
    """Run the pipeline once timed, then (optionally) once under tracemalloc.

    The memory pass is separate so allocation tracing does not distort the
    timing.  Both passes must produce the same counts.
    """
    COUNTERS.reset()
    start = time.perf_counter()
    counts = _pipeline(cfg, log)
    seconds = time.perf_counter() - start
    fallbacks = COUNTERS.fallbacks if cfg.kernel in ("lazy-number", "lazy-kernel") else None

    peak = None
    if measure_memory:
        tracemalloc.start()
        try:
            tracemalloc.reset_peak()
            again = _pipeline(cfg)
            _, peak = tracemalloc.get_traced_memory()
        finally:
            tracemalloc.stop()
        if again != counts:
            raise BenchmarkError(f"non-deterministic counts: {counts} vs {again}")

    n_points, neg, pos, zero = counts
    return BenchReport(
        kernel=cfg.kernel,
        segments=cfg.segments,
        seed=cfg.seed,
        intersections=n_points,
        orient_neg=neg,
        orient_pos=pos,
        orient_zero=zero,
        seconds=seconds,
        peak_bytes=peak,
        exact_fallbacks=fallbacks,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bench", description="Random segment intersection benchmark over several kernels."
    )
    parser.add_argument("--kernel", choices=KERNELS, default="lazy-kernel")
    parser.add_argument("--segments", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0, help="48-bit drand48 state")
    parser.add_argument(
        "--no-shuffle", action="store_true", help="keep intersection points in discovery order"
    )
    parser.add_argument("--no-memory", action="store_true", help="skip the traced memory pass")
    parser.add_argument("--json", action="store_true", help="emit one JSON object")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = BenchConfig(args.kernel, args.segments, args.seed, shuffle=not args.no_shuffle)
    except ValueError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return 2

    def log(msg, end="\n"):
        print(msg, end=end, flush=True)

    try:
        report = run_benchmark(cfg, measure_memory=not args.no_memory, log=None if args.json else log)
    except BenchmarkError as exc:
        print(f"bench: {exc}", file=sys.stderr)
        return 1

    if args.json:
        print(json.dumps(asdict(report)))
    else:
        print(f"Total time   = {report.seconds:.3f}")
        if report.peak_bytes is not None:
            print(f"Total memory = {report.peak_bytes >> 10} KB")
        if report.exact_fallbacks is not None:
            print(f"Exact fallbacks = {report.exact_fallbacks}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
