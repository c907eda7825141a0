"""Degenerate and near-degenerate inputs, all exact doubles."""

import math

up = math.inf
down = -math.inf


def nudge(x, steps=1):
    direction = up if steps > 0 else down
    for _ in range(abs(steps)):
        x = math.nextafter(x, direction)
    return x


def _collinear_triples():
    cases = []
    bases = [(0.0, 0.0), (0.5, 0.25), (-3.0, 7.5), (0.375, -0.625), (1024.0, -512.0)]
    dirs = [(1.0, 1.0), (0.125, 0.375), (3.0, -5.0), (2.0**-20, 2.0**-19)]
    for bx, by in bases:
        for dx, dy in dirs:
            pts = [(bx + k * dx, by + k * dy) for k in (0, 1, 3)]
            cases.append(("collinear", tuple(pts)))
    # the classic floating-point failure around (0.5, 0.5), (12, 12), (24, 24)
    u = 2.0**-53
    for i in range(0, 16, 3):
        for j in range(0, 16, 3):
            cases.append(("near-collinear-grid", ((0.5 + i * u, 0.5 + j * u), (12.0, 12.0), (24.0, 24.0))))
    return cases


def orientation_cases():
    cases = _collinear_triples()
    near = []
    for name, (p, q, r) in cases:
        if name != "collinear":
            continue
        near.append(("collinear-within-1ulp", (p, q, (r[0], nudge(r[1], 1)))))
        near.append(("collinear-within-1ulp", (p, q, (nudge(r[0], -1), r[1]))))
    return cases + near


def _circle_points(radius_sq_root, offset, scale):
    # integer points on x^2 + y^2 = 25 / 625 / 4225, scaled by a power of two
    table = {
        5: [(5, 0), (3, 4), (0, 5), (-4, 3), (-5, 0), (-3, -4), (4, -3)],
        25: [(25, 0), (7, 24), (15, 20), (0, 25), (-24, 7), (-20, -15)],
        65: [(65, 0), (16, 63), (33, 56), (39, 52), (-25, 60), (-63, -16)],
    }
    ox, oy = offset
    return [(ox + x * scale, oy + y * scale) for x, y in table[radius_sq_root]]


def incircle_cases():
    cases = []
    for root, offset, scale in [
        (5, (0.0, 0.0), 1.0),
        (25, (0.5, -0.25), 0.0625),
        (65, (100.0, 3.0), 2.0**-10),
        (5, (-7.75, 1.5), 2.0**30),
    ]:
        pts = _circle_points(root, offset, scale)
        p, q, r = pts[0], pts[1], pts[2]
        for t in pts[3:]:
            cases.append(("cocircular", (p, q, r, t)))
            cases.append(("cocircular-within-1ulp", (p, q, r, (nudge(t[0], 1), t[1]))))
            cases.append(("cocircular-reversed", (r, q, p, t)))
    cases.append(("cocircular-unit", ((0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (1.0, 1.0))))
    cases.append(("collinear-circle-triple", ((0.0, 0.0), (1.0, 1.0), (2.0, 2.0), (3.0, 0.0))))
    return cases


def segment_cases():
    cases = []
    # shared endpoints
    for a, b, c in [
        ((0.0, 0.0), (1.0, 1.0), (2.0, 0.0)),
        ((0.1, 0.2), (0.3, 0.7), (0.9, 0.4)),
        ((0.5, 0.5), (12.0, 12.0), (24.0, 24.0)),
        ((-1.0, 3.0), (2.0, 2.0), (2.0, -5.0)),
        ((1e-300, 1e-300), (1.0, 0.0), (0.0, 1.0)),
    ]:
        cases.append(("shared-endpoint", ((a, b), (b, c))))
        cases.append(("shared-endpoint-reversed", ((b, a), (c, b))))
    # collinear overlaps and touches along exact lines
    for bx, by, dx, dy in [(0.0, 0.0, 1.0, 0.0), (0.5, 0.25, 0.125, 0.375), (-3.0, 7.5, 3.0, -5.0), (2.0, 2.0, 0.0, 1.0)]:
        at = lambda k: (bx + k * dx, by + k * dy)  # noqa: E731
        cases.append(("collinear-overlap", ((at(0), at(2)), (at(1), at(3)))))
        cases.append(("collinear-contained", ((at(0), at(3)), (at(2), at(1)))))
        cases.append(("collinear-touch", ((at(0), at(1)), (at(1), at(3)))))
        cases.append(("collinear-disjoint", ((at(0), at(1)), (at(2), at(3)))))
        cases.append(("collinear-identical", ((at(0), at(2)), (at(2), at(0)))))
        cases.append(("degenerate-on-segment", ((at(1), at(1)), (at(0), at(3)))))
        cases.append(("degenerate-off-line", ((at(1), at(1)), ((at(0)[0] + dy, at(0)[1] - dx), at(3)))))
    # T-junctions and near misses
    cases.append(("t-junction", (((0.0, 0.0), (2.0, 0.0)), ((1.0, 0.0), (1.0, 5.0)))))
    cases.append(("t-junction-near-miss", (((0.0, 0.0), (2.0, 0.0)), ((1.0, nudge(0.0, 1)), (1.0, 5.0)))))
    cases.append(("t-junction-near-hit", (((0.0, 0.0), (2.0, 0.0)), ((1.0, nudge(0.0, -1)), (1.0, 5.0)))))
    cases.append(("cross", (((0.0, 0.0), (2.0, 2.0)), ((0.0, 2.0), (2.0, 0.0)))))
    cases.append(("parallel-disjoint", (((0.0, 0.0), (1.0, 0.0)), ((0.0, 1.0), (1.0, 1.0)))))
    cases.append(("both-degenerate-equal", (((0.3, 0.3), (0.3, 0.3)), ((0.3, 0.3), (0.3, 0.3)))))
    cases.append(("both-degenerate-apart", (((0.3, 0.3), (0.3, 0.3)), ((0.3, 0.4), (0.3, 0.4)))))
    cases.append(
        ("near-collinear-overlap", (((0.5, 0.5), (24.0, 24.0)), ((12.0, 12.0), (36.0, nudge(36.0, 1)))))
    )
    return cases
