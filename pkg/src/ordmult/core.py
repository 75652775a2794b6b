"""Ordinary multinomials: rows of ``(1 + x + ... + x^q)^L`` and their shape.

All values are Python integers, so every comparison below is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import accumulate
from math import comb
from typing import Iterator, Sequence

__all__ = [
    "TriangleRow",
    "ModeKind",
    "ModeResult",
    "IndexSet",
    "expand_row",
    "multinomial",
    "multinomial_nested",
    "modes",
    "mode_set",
    "mode_formula",
    "smallest_mode",
    "index_set",
    "verify_mode_recurrence",
    "is_unimodal",
    "slc_violations",
    "scan_slc",
]


def check_params(q: int, L: int) -> None:
    if not isinstance(q, int) or isinstance(q, bool) or q < 1:
        raise ValueError(f"q must be an integer >= 1, got {q!r}")
    if not isinstance(L, int) or isinstance(L, bool) or L < 0:
        raise ValueError(f"L must be an integer >= 0, got {L!r}")


@dataclass(frozen=True)
class TriangleRow:
    """Row ``L`` of the ``q``-nomial triangle: ``coeffs[k]`` is ``binom(L, k)_q``."""

    q: int
    L: int
    coeffs: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)


class ModeKind(str, Enum):
    PEAK = "peak"
    PLATEAU = "plateau"


@dataclass(frozen=True)
class ModeResult:
    mode_indices: tuple[int, ...]
    max_value: int

    @property
    def kind(self) -> ModeKind:
        return ModeKind.PEAK if len(self.mode_indices) == 1 else ModeKind.PLATEAU

    def __contains__(self, k) -> bool:
        return k in self.mode_indices


@dataclass(frozen=True)
class IndexSet:
    q: int
    L: int
    offsets: tuple[int, ...]


def expand_row(q: int, L: int) -> TriangleRow:
    """Coefficients of ``(1 + x + ... + x^q)^L``.

    Each level applies ``binom(L, k)_q = sum_{m=0..q} binom(L-1, k-m)_q`` as a
    sliding window over prefix sums, so a level costs O(qL).
    """
    check_params(q, L)
    row = [1]
    for _ in range(L):
        prefix = [0, *accumulate(row)]
        width = len(row)
        row = [
            prefix[min(k + 1, width)] - prefix[max(k - q, 0)]
            for k in range(width + q)
        ]
    return TriangleRow(q, L, tuple(row))


def multinomial(q: int, L: int, k: int) -> int:
    """``binom(L, k)_q``, zero outside ``0 <= k <= qL``."""
    check_params(q, L)
    if k < 0 or k > q * L:
        return 0
    return expand_row(q, L).coeffs[k]


def _decreasing_chains(total: int, length: int, cap: int) -> Iterator[tuple[int, ...]]:
    # tuples cap >= j_1 >= j_2 >= ... >= j_length >= 0 summing to total
    if length == 0:
        if total == 0:
            yield ()
        return
    lo = -(-total // length)  # the largest part is at least the mean
    for j in range(min(cap, total), lo - 1, -1):
        for rest in _decreasing_chains(total - j, length - 1, j):
            yield (j, *rest)


def multinomial_nested(q: int, L: int, k: int) -> int:
    """``binom(L, k)_q`` as a sum of chained binomials ``C(L,j1) C(j1,j2) ...``.

    Exponential in ``q``; meant as an independent check on small inputs.
    """
    check_params(q, L)
    if k < 0 or k > q * L:
        return 0
    total = 0
    for chain in _decreasing_chains(k, q, L):
        term = 1
        top = L
        for j in chain:
            term *= comb(top, j)
            top = j
        total += term
    return total


def mode_set(values: Sequence[int]) -> ModeResult:
    """Argmax set of a unimodal sequence by direct scan.

    Raises ``ValueError`` if the maximal indices are not contiguous.
    """
    if not len(values):
        raise ValueError("empty sequence has no mode")
    top = max(values)
    idx = tuple(k for k, v in enumerate(values) if v == top)
    if idx[-1] - idx[0] + 1 != len(idx):
        raise ValueError(f"maximal indices {idx} are not contiguous")
    return ModeResult(idx, top)


def modes(q: int, L: int) -> ModeResult:
    return mode_set(expand_row(q, L).coeffs)


def mode_formula(q: int, L: int) -> int:
    """Closed-form mode ``floor((qL + 1) / 2)``.

    For odd ``qL`` this is the larger of the two plateau indices.
    """
    check_params(q, L)
    return (q * L + 1) // 2


def smallest_mode(q: int, L: int) -> int:
    """``floor(qL / 2)``: the left end of the mode set, except for the flat
    row ``L = 1`` where every index is a mode."""
    check_params(q, L)
    return (q * L) // 2


def index_set(q: int, L: int) -> IndexSet:
    """Window offsets ``I_q`` linking the modes of rows ``L - 1`` and ``L``."""
    check_params(q, L)
    if L < 1:
        raise ValueError("index set needs L >= 1")
    if q % 2 == 0:
        lo, hi = -(q // 2), q // 2
    elif L % 2 == 1:
        lo, hi = -(q + 1) // 2, (q - 1) // 2
    else:
        lo, hi = -(q - 1) // 2, (q + 1) // 2
    return IndexSet(q, L, tuple(range(lo, hi + 1)))


def verify_mode_recurrence(q: int, L: int, anchor: str = "smallest") -> bool:
    """Check ``binom(L, k_L)_q == sum_{i in I_q} binom(L-1, k_{L-1} + i)_q``.

    ``anchor="smallest"`` takes ``k_L = floor(qL/2)``, which is the mode the
    offset sets are built around. ``anchor="formula"`` uses
    ``floor((qL+1)/2)`` instead; that pairing breaks for odd ``q`` and even
    ``L`` (e.g. ``q=5, L=2``) and is kept to demonstrate the mismatch.
    """
    check_params(q, L)
    if L < 1:
        raise ValueError("mode recurrence needs L >= 1")
    if anchor == "smallest":
        pick = smallest_mode
    elif anchor == "formula":
        pick = mode_formula
    else:
        raise ValueError(f"unknown anchor {anchor!r}")
    row = expand_row(q, L)
    prev = expand_row(q, L - 1)
    k_prev = pick(q, L - 1)

    def at(k):
        return prev.coeffs[k] if 0 <= k < len(prev) else 0

    window = sum(at(k_prev + i) for i in index_set(q, L).offsets)
    return row.coeffs[pick(q, L)] == window


def is_unimodal(values: Sequence[int]) -> bool:
    """Weakly rising then weakly falling, with one maximal run."""
    n = len(values)
    i = 0
    while i + 1 < n and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < n and values[i] >= values[i + 1]:
        i += 1
    return i >= n - 1


def slc_violations(values: Sequence[int]) -> list[int]:
    """Interior indices ``l`` where ``a_l^2 > a_{l-1} a_{l+1}`` fails."""
    return [
        l
        for l in range(1, len(values) - 1)
        if values[l] * values[l] <= values[l - 1] * values[l + 1]
    ]


def scan_slc(q_range: Sequence[int], L_range: Sequence[int]) -> list[tuple[int, int, list[int]]]:
    """Run :func:`slc_violations` on every row of the grid.

    Returns only the rows that violate strict log-concavity; an empty list
    is evidence for (not a proof of) strict log-concavity on the grid.
    """
    report = []
    for q in q_range:
        for L in L_range:
            bad = slc_violations(expand_row(q, L).coeffs)
            if bad:
                report.append((q, L, bad))
    return report
