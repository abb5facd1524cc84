"""Closed integer intervals and their two recursive decompositions.

An ``Interval(low, high)`` stands for the set of integers ``low..high``
inclusive, and is empty exactly when ``low > high``.  Any pair of integers
is a legal interval; emptiness is a property, not a construction error.

A non-empty interval can be peeled apart in two ways: ``split_high`` removes
the highest index and leaves ``[low..high-1]``, ``split_low`` removes the
lowest and leaves ``[low+1..high]``.  Repeating one of the peels walks every
index exactly once and terminates on an empty interval, which is what makes
intervals a safe driver for index loops.  ``fold_rl`` and ``fold_lr`` package
the two walks as fold combinators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, TypeVar

A = TypeVar("A")

RIGHT_TO_LEFT = "right_to_left"
LEFT_TO_RIGHT = "left_to_right"


@dataclass(frozen=True)
class Interval:
    """The integers from ``low`` to ``high`` inclusive; empty when ``low > high``."""

    low: int
    high: int

    def is_empty(self) -> bool:
        return self.low > self.high

    def length(self) -> int:
        """Number of integers in the interval (0 when empty)."""
        if self.is_empty():
            return 0
        return self.high - self.low + 1

    def contains(self, index: int) -> bool:
        return self.low <= index <= self.high

    def __contains__(self, index: int) -> bool:
        return self.contains(index)

    def split_high(self) -> Step | None:
        """Peel off the highest index, or None when the interval is empty."""
        if self.is_empty():
            return None
        return Step(self.high, Interval(self.low, self.high - 1))

    def split_low(self) -> Step | None:
        """Peel off the lowest index, or None when the interval is empty."""
        if self.is_empty():
            return None
        return Step(self.low, Interval(self.low + 1, self.high))


@dataclass(frozen=True)
class Step:
    """One peel of a non-empty interval: the removed index and what remains."""

    index: int
    rest: Interval


def fold_rl(
    interval: Interval,
    base: A,
    combine: Callable[[int, A], A],
    *,
    observer=None,
) -> A:
    """Fold over the interval, peeling the highest index first.

    Satisfies ``fold_rl(iv, b, f) == f(iv.high, fold_rl(rest, b, f))`` for a
    non-empty ``iv`` with ``rest = iv.split_high().rest``, and returns ``base``
    on an empty interval.  The nesting bottoms out at ``low``, so ``combine``
    invocations complete from ``low`` upward even though the interval is
    consumed from ``high`` downward.

    The loop below is the unrolled form of that recursion; it handles
    intervals of any length without touching the call stack.  An observer
    (see the trace module) is told about each peel, in peel order, and about
    the empty interval that ends the walk.
    """
    low, high = interval.low, interval.high
    if observer is not None:
        for i in range(high, low - 1, -1):
            observer.interval_visit(i, Interval(low, i), RIGHT_TO_LEFT)
        stopped_on = interval if low > high else Interval(low, low - 1)
        observer.interval_stop(stopped_on, RIGHT_TO_LEFT)
    acc = base
    for i in range(low, high + 1):
        acc = combine(i, acc)
    return acc


def fold_lr(
    interval: Interval,
    base: A,
    combine: Callable[[int, A], A],
    *,
    observer=None,
) -> A:
    """Fold over the interval, peeling the lowest index first.

    Mirror image of ``fold_rl``: satisfies
    ``fold_lr(iv, b, f) == f(iv.low, fold_lr(rest, b, f))`` with
    ``rest = iv.split_low().rest``.  Combine invocations complete from
    ``high`` downward; the peel order reported to an observer runs from
    ``low`` upward.
    """
    low, high = interval.low, interval.high
    if observer is not None:
        for i in range(low, high + 1):
            observer.interval_visit(i, Interval(i, high), LEFT_TO_RIGHT)
        stopped_on = interval if low > high else Interval(high + 1, high)
        observer.interval_stop(stopped_on, LEFT_TO_RIGHT)
    acc = base
    for i in range(high, low - 1, -1):
        acc = combine(i, acc)
    return acc
