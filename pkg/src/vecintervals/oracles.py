"""Naive reference implementations used for differential testing.

Plain index loops over plain Python sequences.  Nothing here touches the
interval machinery, so a bug over there cannot hide behind a matching bug
here.  All of these are deliberately the most boring possible code.
"""

from __future__ import annotations

from typing import Sequence


def naive_sum(low: int, high: int) -> int:
    """Sum of the integers from low to high inclusive; 0 when low > high."""
    total = 0
    for i in range(low, high + 1):
        total += i
    return total


def naive_dot(v1: Sequence[float], v2: Sequence[float]) -> float:
    """Pairwise product sum over plain sequences; ValueError on length mismatch."""
    if len(v1) != len(v2):
        raise ValueError(f"sequence lengths differ: {len(v1)} and {len(v2)}")
    total = 0
    for i in range(len(v1)):
        total += v1[i] * v2[i]
    return total


def sort_oracle(values: Sequence[float]) -> list[float]:
    """Sorted copy, via the built-in comparison sort."""
    return sorted(values)


def merge_oracle(v1: Sequence[float], v2: Sequence[float]) -> list[float]:
    """Expected merge result: sort the concatenation.

    Deliberately not a second merge loop; a merge bug shared with the
    production path would cancel out in a differential test.
    """
    return sort_oracle(list(v1) + list(v2))
