"""Nearest-rank percentile, shared by fleet statistics and analytics.

Nearest-rank is used everywhere deliberately: it is deterministic, never
interpolates, and always returns an element of the data.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

Number = TypeVar("Number", int, float)


def nearest_rank(values: Sequence[Number], percent: int) -> Number:
    """The `percent`-th percentile of `values` by the nearest-rank rule.

    For n values sorted ascending, returns the element at 1-based rank
    ceil(percent * n / 100). The rank is computed in integer arithmetic to
    avoid float-rounding surprises at exact multiples.
    """
    if not values:
        raise ValueError("cannot take a percentile of no values")
    if not 0 < percent <= 100:
        raise ValueError(f"percent must be in 1..100, got {percent}")
    ordered = sorted(values)
    rank = -(-percent * len(ordered) // 100)
    return ordered[rank - 1]
