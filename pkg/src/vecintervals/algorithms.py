"""Reference algorithms driven by interval decomposition.

Interval sums, vector average, dot product, merge of sorted vectors and
in-place insertion sort.  Each one reads or writes vector elements only at
indices drawn from a validated interval, so none of them can go out of
bounds; ``insertion_sort_buggy`` is the deliberate exception, kept to show
what the checked accessors report when the window is off by one.
"""

from __future__ import annotations

from .intervals import Interval, fold_lr, fold_rl
from .vectors import Vector, vfold_lr, vfold_rl


class EmptyVectorError(ValueError):
    """The average of a zero-length vector is undefined."""


class LengthMismatchError(ValueError):
    """Dot product requires vectors of equal length."""


def sum_interval_rl(low: int, high: int) -> int:
    """Sum of the integers in ``[low..high]``, folded highest-first (0 when empty)."""
    return fold_rl(Interval(low, high), 0, lambda i, acc: i + acc)


def sum_interval_lr(low: int, high: int) -> int:
    """Same sum folded lowest-first; agrees with ``sum_interval_rl`` on every interval."""
    return fold_lr(Interval(low, high), 0, lambda i, acc: i + acc)


def avg_vector(vec: Vector) -> float:
    """Arithmetic mean of the elements.

    The total is a vector fold over the full index interval, so every read
    is bounds-safe by construction.  Raises EmptyVectorError on length 0.
    """
    n = len(vec)
    if n == 0:
        raise EmptyVectorError("cannot average an empty vector")
    total = vfold_rl(vec, vec.full_interval(), 0, lambda elem, i, acc: elem + acc)
    return total / n


def dot_product(v1: Vector, v2: Vector) -> float:
    """Sum of pairwise products; 0 for empty vectors.

    Folds over v1's full interval and pairs each element with ``v2.get(i)``.
    The lengths are checked up front (LengthMismatchError), which also puts
    the checked v2 read in bounds for every index the fold can produce.
    """
    if len(v1) != len(v2):
        raise LengthMismatchError(
            f"vector lengths differ: {len(v1)} and {len(v2)}"
        )
    return vfold_lr(
        v1, v1.full_interval(), 0,
        lambda elem, i, acc: elem * v2.get(i) + acc,
    )


# Placeholder for result slots merge has not written yet.  Identity-checked
# (``is``), so input vectors that genuinely contain NaN cannot spoof it.
_UNFILLED = float("nan")


def merge_sorted(v1: Vector, v2: Vector) -> Vector:
    """Merge two non-decreasing vectors into a new sorted vector.

    Three index intervals advance left to right out of step: one per input
    and one for the result.  Every step copies exactly one input element into
    the next result slot, so the loop runs ``len(v1) + len(v2)`` times no
    matter what the inputs hold; sortedness of the output is only promised
    for sorted inputs.  On equal heads the element of ``v2`` is taken first.
    """
    n1, n2 = len(v1), len(v2)
    res = Vector([_UNFILLED] * (n1 + n2), label="result")
    res.observer = v1.observer if v1.observer is not None else v2.observer
    iv1 = v1.full_interval()
    iv2 = v2.full_interval()
    low1, high1 = iv1.low, iv1.high
    low2, high2 = iv2.low, iv2.high
    low_res = 0
    while True:
        empty1 = low1 > high1
        empty2 = low2 > high2
        if empty1 and empty2:
            break
        if empty1:
            res.set(low_res, v2.get(low2))
            low2 += 1
        elif empty2:
            res.set(low_res, v1.get(low1))
            low1 += 1
        elif v1.get(low1) < v2.get(low2):
            res.set(low_res, v1.get(low1))
            low1 += 1
        else:
            res.set(low_res, v2.get(low2))
            low2 += 1
        low_res += 1
    assert all(x is not _UNFILLED for x in res._items), "merge left a result slot unwritten"
    return res


def insert_step(vec: Vector, low: int, high: int) -> None:
    """Sink ``vec[low]`` rightward by adjacent swaps until its neighbour is no smaller.

    Walks ``low..high`` comparing each element with its right neighbour, so
    the window must satisfy ``high + 1 <= len(vec) - 1``; a caller that
    violates that gets OutOfBoundsError from the checked read, nothing worse.
    Stops early as soon as the pair is already ordered.
    """
    i = low
    while i <= high:
        if vec.get(i) <= vec.get(i + 1):
            return
        vec.swap(i, i + 1)
        i += 1


def insertion_sort_in_place(vec: Vector) -> None:
    """Sort the vector non-decreasing in place by adjacent swaps.

    Works suffix-first: element ``low`` is inserted into the already sorted
    ``low+1..n-1`` for ``low = n-1`` down to 0.  The recursion over the index
    interval is unrolled into a countdown loop so long vectors cannot exhaust
    the call stack.  Each insertion window is capped at ``n - 2``, keeping
    the right-neighbour reads of ``insert_step`` in bounds.
    """
    n = len(vec)
    for low in range(n - 1, -1, -1):
        insert_step(vec, low, n - 2)


def insertion_sort_buggy(vec: Vector) -> None:
    """Deliberately broken insertion sort, kept as an out-of-bounds exhibit.

    Identical to ``insertion_sort_in_place`` except the insertion window is
    ``n - 1`` instead of ``n - 2``, so the very first insertion probes index
    ``n`` and raises OutOfBoundsError on every vector of length 2 or more.
    Vectors of length 0 or 1 are left untouched.  Never use this to sort;
    it exists so the diagnostics have a realistic failure to report.
    """
    n = len(vec)
    if n < 2:
        return
    for low in range(n - 1, -1, -1):
        insert_step(vec, low, n - 1)
