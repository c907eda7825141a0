"""Process-wide counters for exact work and filter failures."""

from __future__ import annotations

import gc
from dataclasses import dataclass


@dataclass
class Counters:
    #: exact evaluations: one per lazy node computed exactly, per eager exact
    #: construction, and per exact predicate evaluation in a filtered call
    exact_ops: int = 0
    #: times an interval decision failed and exact arithmetic took over
    fallbacks: int = 0

    def reset(self) -> None:
        self.exact_ops = 0
        self.fallbacks = 0

    def snapshot(self) -> tuple[int, int]:
        return self.exact_ops, self.fallbacks


COUNTERS = Counters()


def live_lazy_nodes() -> int:
    """Number of lazy DAG nodes (numbers and objects) currently alive."""
    from .lazy_number import Lazy

    gc.collect()
    return sum(1 for obj in gc.get_objects() if isinstance(obj, Lazy))
