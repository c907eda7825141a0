"""Filtered predicates: interval evaluation first, exact evaluation on failure."""

from __future__ import annotations

from typing import Any, Callable

from .instrument import COUNTERS
from .interval import UncertainComparison
from .kernel import DOUBLE, INTERVAL, RATIONAL, CartesianKernel, to_interval, to_rational

__all__ = ["FilteredKernel", "FilteredPredicate", "make_filtered_kernel"]


class FilteredPredicate:
    """Adaptor pairing an approximate and an exact version of one predicate.

    Arguments are converted with ``to_approx`` and handed to the approximate
    predicate; if that raises :class:`UncertainComparison`, they are
    converted with ``to_exact`` and the exact predicate decides.  The
    uncertainty signal never leaves :meth:`__call__`.
    """

    __slots__ = ("exact", "approx", "to_exact", "to_approx", "approx_calls", "exact_fallbacks")

    def __init__(
        self,
        exact: Callable[..., Any],
        approx: Callable[..., Any],
        to_exact: Callable[[Any], Any],
        to_approx: Callable[[Any], Any],
    ):
        self.exact = exact
        self.approx = approx
        self.to_exact = to_exact
        self.to_approx = to_approx
        self.approx_calls = 0
        self.exact_fallbacks = 0

    def __call__(self, *args):
        self.approx_calls += 1
        c2a = self.to_approx
        try:
            return self.approx(*[c2a(a) for a in args])
        except UncertainComparison:
            pass
        self.exact_fallbacks += 1
        COUNTERS.fallbacks += 1
        COUNTERS.exact_ops += 1
        c2e = self.to_exact
        return self.exact(*[c2e(a) for a in args])

    def failure_counters(self) -> dict[str, int]:
        return {"approx_calls": self.approx_calls, "exact_fallbacks": self.exact_fallbacks}

    def reset_counters(self) -> None:
        self.approx_calls = 0
        self.exact_fallbacks = 0


PREDICATES = ("orientation", "collinear", "compare_x", "compare_y", "compare_xy", "side_of_oriented_circle")


class FilteredKernel(CartesianKernel):
    """Double-coordinate kernel whose predicates are filtered.

    Objects and constructions are those of the plain double kernel; only
    the predicates are certified.
    """

    def __init__(self):
        super().__init__(DOUBLE)
        self.approx_kernel = CartesianKernel(INTERVAL)
        self.exact_kernel = CartesianKernel(RATIONAL)
        self.predicates = {}
        for name in PREDICATES:
            pred = FilteredPredicate(
                getattr(self.exact_kernel, name),
                getattr(self.approx_kernel, name),
                to_rational,
                to_interval,
            )
            self.predicates[name] = pred
            setattr(self, name, pred)

    def failure_counters(self) -> dict[str, dict[str, int]]:
        return {name: p.failure_counters() for name, p in self.predicates.items()}


def make_filtered_kernel() -> FilteredKernel:
    return FilteredKernel()
