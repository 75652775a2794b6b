"""Convolution powers of the discrete uniform distribution on ``{0, ..., q}``.

The L-fold sum of independent uniforms has probability mass
``binom(L, k)_q / (q + 1)^L`` at ``k``. Everything here stays in exact
rationals except :func:`check_mattner_roos`, whose bound is irrational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import mpmath

from .core import check_params, expand_row, mode_formula, modes

__all__ = [
    "PmfTable",
    "MaxProb",
    "BoundCheck",
    "pmf",
    "max_prob",
    "check_mattner_roos",
    "mattner_roos_grid",
]

BOUND_DPS = 60


@dataclass(frozen=True)
class PmfTable:
    q: int
    L: int
    probs: tuple[Fraction, ...]

    def __getitem__(self, k) -> Fraction:
        return self.probs[k]

    def __len__(self) -> int:
        return len(self.probs)

    @property
    def support(self) -> range:
        return range(self.q * self.L + 1)


@dataclass(frozen=True)
class MaxProb:
    """Maximal probability ``c_{q,L}``.

    ``value`` comes from the closed form at ``floor((qL+1)/2)``;
    ``scan_value`` is the maximum found by scanning the whole pmf.
    """

    q: int
    L: int
    value: Fraction
    arg: int
    scan_value: Fraction
    mode_indices: tuple[int, ...]

    @property
    def agrees(self) -> bool:
        return self.value == self.scan_value and self.arg in self.mode_indices


@dataclass(frozen=True)
class BoundCheck:
    q: int
    L: int
    holds: bool
    value: Fraction
    bound: mpmath.mpf
    slack: mpmath.mpf


def pmf(q: int, L: int) -> PmfTable:
    row = expand_row(q, L)
    denom = (q + 1) ** L
    return PmfTable(q, L, tuple(Fraction(c, denom) for c in row.coeffs))


def max_prob(q: int, L: int) -> MaxProb:
    check_params(q, L)
    row = expand_row(q, L)
    denom = (q + 1) ** L
    arg = mode_formula(q, L)
    found = modes(q, L)
    return MaxProb(
        q=q,
        L=L,
        value=Fraction(row.coeffs[arg], denom),
        arg=arg,
        scan_value=max(Fraction(c, denom) for c in row.coeffs),
        mode_indices=found.mode_indices,
    )


def mattner_roos_bound(q: int, L: int, dps: int = BOUND_DPS) -> mpmath.mpf:
    """``sqrt(6 / (pi q (q + 2) L))``."""
    with mpmath.workdps(dps):
        return +mpmath.sqrt(6 / (mpmath.pi * q * (q + 2) * L))


def check_mattner_roos(q: int, L: int, dps: int = BOUND_DPS) -> BoundCheck:
    """Test the strict inequality ``c_{q,L} < sqrt(6 / (pi q (q+2) L))``.

    Fails for ``L = 2`` and ``q >= 4``, where ``c_{q,2} = 1/(q+1)`` sits just
    above the bound.
    """
    check_params(q, L)
    if L < 1:
        raise ValueError("the bound needs L >= 1")
    value = max_prob(q, L).value
    with mpmath.workdps(dps):
        bound = mattner_roos_bound(q, L, dps)
        exact = mpmath.mpf(value.numerator) / value.denominator
        slack = bound - exact
    return BoundCheck(q, L, bool(slack > 0), value, bound, slack)


def mattner_roos_grid(q_range: Sequence[int], L_range: Sequence[int]) -> list[BoundCheck]:
    return [check_mattner_roos(q, L) for q in q_range for L in L_range]
