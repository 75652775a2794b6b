"""Acceleration of slowly converging alternating series."""

from __future__ import annotations

from typing import Sequence

import mpmath


def partial_sums(terms: Sequence) -> list:
    out = []
    acc = 0
    for a in terms:
        acc = acc + a
        out.append(acc)
    return out


def euler_average(partials: Sequence, depth: int):
    """Repeated pairwise averaging of the last ``depth + 1`` partial sums.

    This is the van Wijngaarden form of the Euler transform. For terms
    ``(-1)^n a_n`` with ``a_n`` smooth, each averaging pass removes one more
    order of the oscillating error.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if len(partials) < depth + 1:
        raise ValueError(
            f"need at least {depth + 1} partial sums, got {len(partials)}"
        )
    row = list(partials[len(partials) - depth - 1 :])
    for _ in range(depth):
        row = [(a + b) / 2 for a, b in zip(row, row[1:])]
    return row[0]


def accelerated_sum(terms: Sequence, depth: int = 20, dps: int = 50):
    with mpmath.workdps(dps):
        return +euler_average(partial_sums([mpmath.mpf(a) for a in terms]), depth)
