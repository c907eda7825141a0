"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line through the ``acceptance``
fixture; the lines are repeated in the terminal summary.
"""

import json
import math
import operator
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from lazygeom import (
    CartesianKernel,
    Interval,
    LazyNumber,
    Point2,
    default_handle,
    live_lazy_nodes,
    make_filtered_kernel,
    make_lazy_kernel,
    update_exact,
)
from lazygeom.interval import UncertainComparison, iv_add, iv_div, iv_mul, iv_sub
from lazygeom.lazy_kernel import LazyPoint, widen_approximation
from lazygeom.lazy_number import LAZY, force_exact, ln_from_double

import oracles
from dags import random_construction_dag
from fixtures import incircle_cases, nudge, orientation_cases, segment_cases


def _coord(rng):
    r = rng.random()
    if r < 0.15:
        return float(rng.randint(-4, 4))  # small grid: frequent exact degeneracy
    if r < 0.25:
        return nudge(float(rng.randint(-4, 4)), rng.choice((-1, 1)))
    return rng.random()


def test_c1_exactness_oracle_suite(acceptance):
    fk, lk = make_filtered_kernel(), make_lazy_kernel()
    rng = random.Random(1)
    start = time.perf_counter()
    mismatches = 0
    n_random = 100_000
    for i in range(n_random):
        kind = i % 5
        if kind < 3:
            c = [(_coord(rng), _coord(rng)) for _ in range(3)]
            if kind == 2:
                # put the third point near the line through the first two
                (px, py), (qx, qy) = c[0], c[1]
                c[2] = (2 * qx - px, nudge(2 * qy - py, rng.randint(-1, 1)))
            want = oracles.orientation(*c)
            got = (fk.orientation(*[Point2(*x) for x in c]), lk.orientation(*[lk.point(*x) for x in c]))
        elif kind == 3:
            c = [(_coord(rng), _coord(rng)) for _ in range(4)]
            want = oracles.incircle(*c)
            got = (
                fk.side_of_oriented_circle(*[Point2(*x) for x in c]),
                lk.side_of_oriented_circle(*[lk.point(*x) for x in c]),
            )
        else:
            c = [(_coord(rng), _coord(rng)) for _ in range(2)]
            want = oracles.compare(c[0][0], c[1][0]) or oracles.compare(c[0][1], c[1][1])
            got = (fk.compare_xy(*[Point2(*x) for x in c]), lk.compare_xy(*[lk.point(*x) for x in c]))
        mismatches += got[0] != want or got[1] != want

    n_fixtures = 0
    for _name, pts in orientation_cases():
        n_fixtures += 1
        want = oracles.orientation(*pts)
        mismatches += fk.orientation(*[Point2(*x) for x in pts]) != want
        mismatches += lk.orientation(*[lk.point(*x) for x in pts]) != want
        mismatches += lk.collinear(*[lk.point(*x) for x in pts]) != (want == 0)
    for _name, pts in incircle_cases():
        n_fixtures += 1
        want = oracles.incircle(*pts)
        mismatches += fk.side_of_oriented_circle(*[Point2(*x) for x in pts]) != want
        mismatches += lk.side_of_oriented_circle(*[lk.point(*x) for x in pts]) != want
    for _name, (s1, s2) in segment_cases():
        n_fixtures += 1
        kind, value = oracles.intersect(s1, s2)
        r = lk.intersect_segments(
            lk.segment(lk.point(*s1[0]), lk.point(*s1[1])), lk.segment(lk.point(*s2[0]), lk.point(*s2[1]))
        )
        mismatches += r.kind is not kind
        if r.kind is kind and r.value is not None:
            mismatches += oracles.as_q(update_exact(r.value)) != value
        fr = fk.intersect_segments(fk.segment(Point2(*s1[0]), Point2(*s1[1])), fk.segment(Point2(*s2[0]), Point2(*s2[1])))
        mismatches += fr.kind is not kind
    elapsed = time.perf_counter() - start
    acceptance(
        "C1 exactness oracle suite",
        mismatches == 0 and n_fixtures >= 50 and elapsed < 60,
        f"random={n_random} fixtures={n_fixtures} mismatches={mismatches} time={elapsed:.1f}s (<60s)",
    )


def test_c2_lazy_construction_exactness(acceptance):
    lk = make_lazy_kernel()
    rng = random.Random(2)
    mismatches = checks = 0
    n_dags = 10_000
    for _ in range(n_dags):
        pool = random_construction_dag(rng, max_depth=8)
        # the deepest few results, plus random picks
        picks = pool[-3:] + [rng.choice(pool) for _ in range(2)]
        p, q, r, t = (picks[i] for i in (0, 1, 2, 3))
        checks += 4
        mismatches += lk.orientation(p[0], q[0], r[0]) != oracles.orientation(p[1], q[1], r[1])
        mismatches += lk.compare_x(p[0], q[0]) != oracles.compare(p[1][0], q[1][0])
        mismatches += lk.compare_y(q[0], r[0]) != oracles.compare(q[1][1], r[1][1])
        mismatches += lk.side_of_oriented_circle(p[0], q[0], r[0], t[0]) != oracles.incircle(p[1], q[1], r[1], t[1])
        # midpoint collinearity is a guaranteed degenerate case
        a, b = picks[4], rng.choice(pool)
        m = lk.construct_midpoint(a[0], b[0])
        checks += 1
        mismatches += lk.orientation(a[0], m, b[0]) != 0
    acceptance(
        "C2 lazy-construction exactness",
        mismatches == 0,
        f"dags={n_dags} depth<=8 predicate checks={checks} mismatches={mismatches}",
    )


def _bench(kernel, segments=500, seed=1, memory=True):
    cmd = [sys.executable, "-m", "lazygeom.bench", "--kernel", kernel, "--segments", str(segments),
           "--seed", str(seed), "--json"]
    if not memory:
        cmd.append("--no-memory")
    out = subprocess.run(cmd, check=True, capture_output=True, text=True).stdout
    return json.loads(out)


@pytest.fixture(scope="module")
def bench_runs():
    return {
        "lazy-kernel": _bench("lazy-kernel"),
        "lazy-number": _bench("lazy-number"),
        "exact": _bench("exact", memory=False),
    }


def test_c3_lazy_kernel_vs_lazy_number(acceptance, bench_runs):
    lk, ln = bench_runs["lazy-kernel"], bench_runs["lazy-number"]
    keys = ("intersections", "orient_neg", "orient_pos", "orient_zero")
    same = all(lk[k] == ln[k] for k in keys)
    t_ratio = lk["seconds"] / ln["seconds"]
    m_ratio = lk["peak_bytes"] / ln["peak_bytes"]
    acceptance(
        "C3 lazy-kernel vs lazy-number at 500 segments",
        same and t_ratio <= 0.8 and m_ratio <= 1 / 3,
        f"time {lk['seconds']:.2f}s/{ln['seconds']:.2f}s={t_ratio:.2f} (<=0.8) "
        f"mem {lk['peak_bytes'] >> 10}KB/{ln['peak_bytes'] >> 10}KB={m_ratio:.3f} (<=0.333) counts_equal={same}",
    )


def test_c4_lazy_kernel_vs_exact(acceptance, bench_runs):
    lk, ex = bench_runs["lazy-kernel"], bench_runs["exact"]
    keys = ("intersections", "orient_neg", "orient_pos", "orient_zero")
    same = all(lk[k] == ex[k] for k in keys)
    ratio = lk["seconds"] / ex["seconds"]
    acceptance(
        "C4 lazy-kernel vs exact at 500 segments",
        same and ratio <= 0.5,
        f"time {lk['seconds']:.2f}s/{ex['seconds']:.2f}s={ratio:.2f} (<=0.5) counts_equal={same}",
    )


def test_c5_laziness_and_filter_rate(acceptance, counters):
    rng = random.Random(5)
    lk, nk = make_lazy_kernel(), CartesianKernel(LAZY)
    # a pipeline of constructions whose every predicate is interval-decided
    decided = True
    for _ in range(2000):
        p, q, r = (lk.point(rng.random(), rng.random()) for _ in range(3))
        m = lk.construct_midpoint(p, q)
        lk.orientation(m, r, lk.point(2.0, -1.0))
        lk.compare_x(m, lk.point(1.5, 0.0))
        x = nk.construct_midpoint(nk.point(rng.random(), rng.random()), nk.point(rng.random(), rng.random()))
        nk.compare_y(x, nk.point(0.0, 1.5))
        decided = decided and counters.fallbacks == 0
    zero_ops = counters.exact_ops

    fk = make_filtered_kernel()
    n = 100_000
    for _ in range(n):
        a, b, c = (rng.random(), rng.random()), (rng.random(), rng.random()), (rng.random(), rng.random())
        fk.orientation(Point2(*a), Point2(*b), Point2(*c))
        lk.orientation(lk.point(*a), lk.point(*b), lk.point(*c))
    f_rate = fk.failure_counters()["orientation"]["exact_fallbacks"] / n
    l_rate = lk.failure_counters()["orientation"]["exact_fallbacks"] / n
    acceptance(
        "C5 laziness and filter rate",
        decided and zero_ops == 0 and f_rate < 0.01 and l_rate < 0.01,
        f"exact_ops={zero_ops} (==0) fallback rate filtered={f_rate:.5f} lazy={l_rate:.5f} (<0.01)",
    )


_IV_OPS = [(iv_add, operator.add), (iv_sub, operator.sub), (iv_mul, operator.mul), (iv_div, operator.truediv)]


def test_c6_interval_inclusion(acceptance):
    rng = random.Random(6)
    violations = evaluations = 0
    samplers = (
        rng.random,
        lambda: rng.uniform(-1e3, 1e3),
        lambda: math.ldexp(rng.random() - 0.5, rng.randint(-60, 60)),
        lambda: float(rng.randint(-3, 3)),
    )
    while evaluations < 1_000_000:
        # a random expression of up to 6 steps, checked after each step
        sample = rng.choice(samplers)
        x = sample()
        iv, q = Interval(x), Fraction(x)
        for _ in range(rng.randint(1, 6)):
            y = sample()
            iv_op, op = rng.choice(_IV_OPS)
            try:
                iv = iv_op(iv, Interval(y))
            except UncertainComparison:
                break
            q = op(q, Fraction(y))
            evaluations += 1
            if not iv.inf <= q <= iv.sup:
                violations += 1
    acceptance(
        "C6 interval inclusion",
        violations == 0,
        f"evaluations={evaluations} violations={violations}",
    )


def test_c7_pruning_and_caching(acceptance, counters):
    lk = make_lazy_kernel()
    rng = random.Random(7)
    base = live_lazy_nodes()
    m = lk.point(rng.random(), rng.random())
    for _ in range(999):
        m = lk.construct_midpoint(m, lk.point(rng.random(), rng.random()))
    built = live_lazy_nodes() - base
    update_exact(m)
    after = live_lazy_nodes() - base
    defaults_alive = all(default_handle(k).et is not None for k in (LazyPoint, LazyNumber))
    ops = counters.exact_ops
    update_exact(m)
    extra_ops = counters.exact_ops - ops

    # call-stack safety on depth 10^5, for objects and numbers
    deep = lk.point(0.1, 0.7)
    for _ in range(100_000):
        deep = lk.construct_midpoint(deep, deep)
    deep_ok = update_exact(deep) == Point2(Fraction(0.1), Fraction(0.7))
    x = ln_from_double(0.5)
    one = ln_from_double(1.0)
    for _ in range(100_000):
        x = x + one
    deep_ok = deep_ok and force_exact(x) == Fraction(200_001, 2)

    acceptance(
        "C7 pruning and caching",
        built == 1999 and after == 1 and defaults_alive and extra_ops == 0 and deep_ok,
        f"chain nodes={built} live after update={after} (==1 + shared defaults) "
        f"repeat exact_ops={extra_ops} depth 1e5 ok={deep_ok}",
    )


def test_c8_midpoint_collinearity(acceptance, counters):
    lk = make_lazy_kernel()
    # a: a segment intersection point, b: a vertical projection onto a line
    s1 = lk.segment(lk.point(0.1, 0.1), lk.point(0.9, 0.7))
    s2 = lk.segment(lk.point(0.1, 0.8), lk.point(0.7, 0.05))
    a = lk.intersect_segments(s1, s2).value
    line = lk.construct_line(lk.point(0.0, 0.3), lk.point(1.0, 0.6))
    b = lk.vertical_projection(lk.point(0.3, 0.9), line)
    m = lk.construct_midpoint(a, b)
    lazy_before = a.et is None and b.et is None and m.et is None
    for h in (a, b, m):
        widen_approximation(h)
    zero = lk.orientation(a, m, b) == 0
    cached = all(h.et is not None for h in (a, b, m))
    acceptance(
        "C8 collinear(a, midpoint(a, b), b) with narrowed approximations",
        lazy_before and zero and counters.fallbacks >= 1 and cached,
        f"orientation zero={zero} fallbacks={counters.fallbacks} (>=1) exact cached={cached}",
    )
