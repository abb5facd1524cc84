"""Fixed-length vectors with checked access, and intervals validated against them.

``Vector`` is a mutable sequence of numbers whose length never changes.  Its
``get``/``set``/``swap`` operations are bounds-checked and raise
``OutOfBoundsError`` carrying the offending index, the vector length and the
operation name, so a failure says exactly what went wrong and where.

``VectorInterval`` is an ``Interval`` whose bounds were proven compatible
with a given vector length at construction time.  A non-empty one can only
name valid indices, which lets the vector folds below read elements without
a per-access check: the bounds reasoning happens once, up front.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, TypeVar

from .intervals import Interval, LEFT_TO_RIGHT, RIGHT_TO_LEFT

A = TypeVar("A")


class OutOfBoundsError(IndexError):
    """Checked vector access outside ``0..len-1``, with a full diagnostic."""

    def __init__(self, attempted_index: int, vector_length: int, operation_name: str):
        self.attempted_index = attempted_index
        self.vector_length = vector_length
        self.operation_name = operation_name
        super().__init__(
            f"{operation_name}: index {attempted_index} is out of bounds "
            f"for a vector of length {vector_length}"
        )


class IntervalConstraintError(ValueError):
    """Interval bounds incompatible with the vector length they were checked against."""


class VectorMismatchError(ValueError):
    """A VectorInterval was used with a vector of a different length."""


class Vector:
    """A numeric vector of fixed length with bounds-checked element access.

    ``observer`` is a hook for the step tracer (see the trace module); it is
    None in normal use and every access method skips it with a single test.
    ``label`` is a display name for traces and has no semantic effect.
    """

    __slots__ = ("_items", "label", "observer")

    def __init__(self, elements: Iterable[float], *, label: str | None = None):
        self._items = list(elements)
        self.label = label
        self.observer = None

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other) -> bool:
        if isinstance(other, Vector):
            return self._items == other._items
        return NotImplemented

    def __repr__(self) -> str:
        return f"Vector({self._items!r})"

    def to_list(self) -> list[float]:
        """Copy of the elements as a plain list."""
        return list(self._items)

    def full_interval(self) -> VectorInterval:
        """The interval of every valid index: ``[0..len-1]``, empty for length 0."""
        n = len(self._items)
        return VectorInterval(0, n - 1, n)

    def get(self, index: int) -> float:
        items = self._items
        if 0 <= index < len(items):
            if self.observer is not None:
                self.observer.element_read(self, index, items[index], True)
            return items[index]
        if self.observer is not None:
            self.observer.element_read(self, index, None, False)
        raise OutOfBoundsError(index, len(items), "get")

    def set(self, index: int, value: float) -> None:
        items = self._items
        if 0 <= index < len(items):
            if self.observer is not None:
                self.observer.element_written(self, index, value, True)
            items[index] = value
            return
        if self.observer is not None:
            self.observer.element_written(self, index, value, False)
        raise OutOfBoundsError(index, len(items), "set")

    def swap(self, i: int, j: int) -> None:
        """Exchange elements i and j; on a bad index the vector is untouched."""
        items = self._items
        n = len(items)
        bad = i if not 0 <= i < n else (j if not 0 <= j < n else None)
        if bad is not None:
            if self.observer is not None:
                self.observer.elements_swapped(self, i, j, False)
            raise OutOfBoundsError(bad, n, "swap")
        if self.observer is not None:
            self.observer.elements_swapped(self, i, j, True)
        items[i], items[j] = items[j], items[i]


@dataclass(frozen=True)
class VectorInterval(Interval):
    """An interval validated against a vector length at construction.

    The constraints are ``low >= 0``, ``low <= vec_len`` and
    ``-1 <= high <= vec_len - 1``; violating any of them raises
    ``IntervalConstraintError`` naming the offending bound.  They admit every
    sub-range of valid indices plus the empty shapes that index walks shrink
    to (``high == low - 1`` down to ``[vec_len..vec_len-1]`` and ``[0..-1]``),
    and nothing else.  Inherits all interval operations; peeling a validated
    interval yields bounds that still satisfy the constraints.
    """

    vec_len: int

    def __post_init__(self):
        if self.low < 0:
            raise IntervalConstraintError(
                f"low bound {self.low} is negative"
            )
        if self.low > self.vec_len:
            raise IntervalConstraintError(
                f"low bound {self.low} exceeds vector length {self.vec_len}"
            )
        if self.high < -1:
            raise IntervalConstraintError(
                f"high bound {self.high} is below -1"
            )
        if self.high > self.vec_len - 1:
            raise IntervalConstraintError(
                f"high bound {self.high} exceeds last valid index {self.vec_len - 1}"
            )


def _require_pairing(vec: Vector, interval: VectorInterval) -> None:
    if not isinstance(interval, VectorInterval):
        raise TypeError("vector folds require a VectorInterval validated against the vector")
    if interval.vec_len != len(vec._items):
        raise VectorMismatchError(
            f"interval was validated for length {interval.vec_len}, "
            f"but the vector has length {len(vec._items)}"
        )


def vfold_rl(
    vec: Vector,
    interval: VectorInterval,
    base: A,
    combine: Callable[[float, int, A], A],
) -> A:
    """Fold over the vector elements named by ``interval``, highest index first.

    ``combine(element, index, acc)`` follows the same nesting as ``fold_rl``,
    so invocations complete from ``low`` upward while the interval is peeled
    from ``high`` downward.  The interval must have been validated against
    this vector's length (``VectorMismatchError`` otherwise); that validation
    is what makes the unchecked element reads here safe.
    """
    _require_pairing(vec, interval)
    items = vec._items
    low, high = interval.low, interval.high
    obs = vec.observer
    if obs is not None:
        for i in range(high, low - 1, -1):
            obs.element_visit(vec, i, items[i], Interval(low, i), RIGHT_TO_LEFT)
        stopped_on = Interval(low, high) if low > high else Interval(low, low - 1)
        obs.interval_stop(stopped_on, RIGHT_TO_LEFT)
    acc = base
    for i in range(low, high + 1):
        acc = combine(items[i], i, acc)
    return acc


def vfold_lr(
    vec: Vector,
    interval: VectorInterval,
    base: A,
    combine: Callable[[float, int, A], A],
) -> A:
    """Mirror of ``vfold_rl``: lowest index peeled first, combine completes downward."""
    _require_pairing(vec, interval)
    items = vec._items
    low, high = interval.low, interval.high
    obs = vec.observer
    if obs is not None:
        for i in range(low, high + 1):
            obs.element_visit(vec, i, items[i], Interval(i, high), LEFT_TO_RIGHT)
        stopped_on = Interval(low, high) if low > high else Interval(high + 1, high)
        obs.interval_stop(stopped_on, LEFT_TO_RIGHT)
    acc = base
    for i in range(high, low - 1, -1):
        acc = combine(items[i], i, acc)
    return acc
