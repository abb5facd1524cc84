"""Bounds-safe vector processing driven by validated index intervals.

The core idea: instead of scattering index arithmetic through loops, describe
the indices to touch as a closed integer interval, validate it against the
vector's length once, and let fold combinators do the walking.  A validated
non-empty interval can only name valid indices, so the element accesses it
drives cannot go out of bounds; everything else goes through checked accessors
that fail with a precise diagnostic instead of reading garbage.

``insertion_sort_buggy`` (an out-of-bounds exhibit) stays out of this public
surface on purpose; import it explicitly from ``vecintervals.algorithms``.
"""

from .algorithms import (
    EmptyVectorError,
    LengthMismatchError,
    avg_vector,
    dot_product,
    insert_step,
    insertion_sort_in_place,
    merge_sorted,
    sum_interval_lr,
    sum_interval_rl,
)
from .intervals import (
    Interval,
    LEFT_TO_RIGHT,
    RIGHT_TO_LEFT,
    Step,
    fold_lr,
    fold_rl,
)
from .trace import (
    TraceEvent,
    TraceRecorder,
    TracedRun,
    trace_interval,
    traced_run,
)
from .vectors import (
    IntervalConstraintError,
    OutOfBoundsError,
    Vector,
    VectorInterval,
    VectorMismatchError,
    vfold_lr,
    vfold_rl,
)

__version__ = "0.1.0"

__all__ = [
    "EmptyVectorError",
    "Interval",
    "IntervalConstraintError",
    "LEFT_TO_RIGHT",
    "LengthMismatchError",
    "OutOfBoundsError",
    "RIGHT_TO_LEFT",
    "Step",
    "TraceEvent",
    "TraceRecorder",
    "TracedRun",
    "Vector",
    "VectorInterval",
    "VectorMismatchError",
    "avg_vector",
    "dot_product",
    "fold_lr",
    "fold_rl",
    "insert_step",
    "insertion_sort_in_place",
    "merge_sorted",
    "sum_interval_lr",
    "sum_interval_rl",
    "trace_interval",
    "traced_run",
    "vfold_lr",
    "vfold_rl",
]
