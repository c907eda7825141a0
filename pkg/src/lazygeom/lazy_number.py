"""Lazy exact numbers.

A :class:`LazyNumber` is a node of an operation-history DAG.  Arithmetic
only does interval arithmetic and records the operation; the exact rational
value is computed on demand, cached, and the node's interval is then
tightened to the exact value and its children dropped.

:class:`Lazy` is the common base of lazy numbers and lazy geometric objects
so that a single iterative evaluator (:func:`force_exact`) walks DAGs that
mix both.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import rat_sign, rat_to_interval
from .instrument import COUNTERS
from .interval import UNCERTAIN, Interval, UncertainComparison, iv_compare, iv_sign
from .kernel import NumberType

__all__ = [
    "LAZY",
    "Lazy",
    "LazyNumber",
    "force_exact",
    "ln_add",
    "ln_compare",
    "ln_div",
    "ln_exact",
    "ln_from_double",
    "ln_from_rational",
    "ln_mul",
    "ln_sign",
    "ln_sub",
]


class Lazy:
    """A DAG node: approximation ``at`` and cached exact value ``et``."""

    __slots__ = ("at", "et")

    def children(self) -> tuple:
        """Handles whose exact values are needed to compute this one."""
        return ()

    def _compute(self) -> None:
        """Set ``et`` from the (already exact) children, refresh ``at``, prune."""
        raise NotImplementedError

    def exact(self):
        return force_exact(self)


def force_exact(node: Lazy):
    """Exact value of ``node``, evaluating uncached descendants bottom-up.

    Uses an explicit stack so DAG depth is not limited by the call stack.
    """
    et = node.et
    if et is not None:
        return et
    stack = [node]
    while stack:
        top = stack[-1]
        if top.et is not None:
            stack.pop()
            continue
        pending = [c for c in top.children() if c.et is None]
        if pending:
            stack.extend(pending)
        else:
            top._compute()
            stack.pop()
    return node.et


# recipes
LEAF = 0
LEAF_DOUBLE = 1
ADD = 2
SUB = 3
MUL = 4
DIV = 5
NEG = 6

_OP_NAMES = {LEAF: "leaf", LEAF_DOUBLE: "double", ADD: "+", SUB: "-", MUL: "*", DIV: "/", NEG: "neg"}


class LazyNumber(Lazy):
    """Lazy exact number; arithmetic builds DAG nodes over intervals."""

    __slots__ = ("op", "left", "right")

    def __init__(self, at: Interval, et, op: int, left=None, right=None):
        self.at = at
        self.et = et
        self.op = op
        self.left = left
        self.right = right

    def __repr__(self) -> str:
        state = f"exact={self.et}" if self.et is not None else "exact=?"
        return f"LazyNumber({_OP_NAMES[self.op]}, {self.at!r}, {state})"

    def children(self) -> tuple:
        op = self.op
        if op >= ADD:
            if op == NEG:
                return (self.left,)
            return (self.left, self.right)
        return ()

    def _compute(self) -> None:
        op = self.op
        if op == LEAF_DOUBLE:
            self.et = Fraction(self.left)
            self.left = None
            return
        a = self.left.et
        if op == ADD:
            et = a + self.right.et
        elif op == SUB:
            et = a - self.right.et
        elif op == MUL:
            et = a * self.right.et
        elif op == DIV:
            et = a / self.right.et
        else:
            et = -a
        COUNTERS.exact_ops += 1
        self.et = et
        self.at = rat_to_interval(et)
        self.op = LEAF
        self.left = self.right = None

    # arithmetic

    def __add__(self, other):
        if other.__class__ is not LazyNumber:
            other = _lift(other)
        return LazyNumber(self.at + other.at, None, ADD, self, other)

    def __radd__(self, other):
        return _lift(other) + self

    def __sub__(self, other):
        if other.__class__ is not LazyNumber:
            other = _lift(other)
        return LazyNumber(self.at - other.at, None, SUB, self, other)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        if other.__class__ is not LazyNumber:
            other = _lift(other)
        return LazyNumber(self.at * other.at, None, MUL, self, other)

    def __rmul__(self, other):
        return _lift(other) * self

    def __truediv__(self, other):
        if other.__class__ is not LazyNumber:
            other = _lift(other)
        try:
            at = self.at / other.at
        except UncertainComparison:
            # divisor interval straddles zero: settle it exactly now
            COUNTERS.fallbacks += 1
            den = force_exact(other)
            if not den:
                raise ZeroDivisionError("lazy division by exact zero") from None
            COUNTERS.exact_ops += 1
            return ln_from_rational(force_exact(self) / den)
        return LazyNumber(at, None, DIV, self, other)

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __neg__(self):
        return LazyNumber(-self.at, None, NEG, self)

    def __pos__(self):
        return self

    # exact comparisons; intervals first

    def __lt__(self, other):
        return ln_compare(self, _as_lazy(other)) < 0

    def __le__(self, other):
        return ln_compare(self, _as_lazy(other)) <= 0

    def __gt__(self, other):
        return ln_compare(self, _as_lazy(other)) > 0

    def __ge__(self, other):
        return ln_compare(self, _as_lazy(other)) >= 0

    def __eq__(self, other):
        if not isinstance(other, (LazyNumber, int, float, Fraction)):
            return NotImplemented
        return ln_compare(self, _as_lazy(other)) == 0

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    __hash__ = None

    def __float__(self) -> float:
        return float(force_exact(self))


def _as_lazy(value) -> LazyNumber:
    return value if value.__class__ is LazyNumber else _lift(value)


def _lift(value) -> LazyNumber:
    if isinstance(value, float):
        return ln_from_double(value)
    if isinstance(value, (int, Fraction)):
        return ln_from_rational(Fraction(value))
    raise TypeError(f"cannot combine LazyNumber with {type(value).__name__}")


def ln_from_double(x: float) -> LazyNumber:
    """Leaf holding a double; its exact value is the double itself."""
    x = float(x)
    at = Interval(x, x)  # rejects NaN
    if x - x != 0:
        raise ValueError(f"non-finite value {x!r}")
    return LazyNumber(at, None, LEAF_DOUBLE, x)


def ln_from_rational(q) -> LazyNumber:
    q = Fraction(q)
    return LazyNumber(rat_to_interval(q), q, LEAF)


def ln_add(a: LazyNumber, b: LazyNumber) -> LazyNumber:
    return a + b


def ln_sub(a: LazyNumber, b: LazyNumber) -> LazyNumber:
    return a - b


def ln_mul(a: LazyNumber, b: LazyNumber) -> LazyNumber:
    return a * b


def ln_div(a: LazyNumber, b: LazyNumber) -> LazyNumber:
    return a / b


def ln_exact(a: LazyNumber) -> Fraction:
    return force_exact(a)


def ln_sign(a: LazyNumber) -> int:
    s = iv_sign(a.at)
    if s is not UNCERTAIN:
        return int(s)
    COUNTERS.fallbacks += 1
    return rat_sign(force_exact(a))


def ln_compare(a: LazyNumber, b: LazyNumber) -> int:
    c = iv_compare(a.at, b.at)
    if c is not UNCERTAIN:
        return int(c)
    COUNTERS.fallbacks += 1
    x = force_exact(a)
    y = force_exact(b)
    return (x > y) - (x < y)


def _bounds(a: LazyNumber) -> tuple:
    at = a.at
    return at.inf, at.sup


LAZY = NumberType("lazy", ln_from_double, ln_sign, ln_compare, _bounds)

# shared default handle for pruned argument slots
DEFAULT_NUMBER = LazyNumber(Interval(0.0, 0.0), Fraction(0), LEAF)
