"""Property scans over a grid of ``(q, L)`` pairs.

Each check maps one pair to a list of findings (empty means the pair
passes). Pairs are independent, so :func:`run_scan` can fan them out to a
process pool; results come back in grid order either way.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .convolution import check_mattner_roos, max_prob
from .core import (
    expand_row,
    is_unimodal,
    mode_formula,
    mode_set,
    slc_violations,
    verify_mode_recurrence,
)

CHECKS = (
    "slc",
    "symmetry",
    "normalization",
    "unimodal",
    "mode",
    "recurrence",
    "max-prob",
    "mattner-roos",
)


@dataclass
class ScanResult:
    check: str
    violations: list = field(default_factory=list)
    pairs_checked: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations


def _check_pair(args):
    q, L, checks = args
    row = expand_row(q, L).coeffs
    n = q * L
    out = {}
    for name in checks:
        found = []
        if name == "slc":
            bad = slc_violations(row)
            if bad:
                found.append({"indices": bad})
        elif name == "symmetry":
            bad = [k for k in range(n + 1) if row[k] != row[n - k]]
            if bad:
                found.append({"indices": bad})
        elif name == "normalization":
            if sum(row) != (q + 1) ** L:
                found.append({"sum": sum(row)})
        elif name == "unimodal":
            if not is_unimodal(row):
                found.append({"unimodal": False})
        elif name == "mode":
            m = mode_set(row)
            expected = (n // 2,) if n % 2 == 0 else ((n - 1) // 2, (n + 1) // 2)
            k = mode_formula(q, L)
            if k not in m.mode_indices or m.mode_indices != expected:
                found.append({"modes": list(m.mode_indices), "formula": k})
        elif name == "recurrence":
            if L >= 1 and not verify_mode_recurrence(q, L):
                found.append({"recurrence": False})
        elif name == "max-prob":
            mp = max_prob(q, L)
            if not mp.agrees:
                found.append({"formula": mp.value, "scan": mp.scan_value})
        elif name == "mattner-roos":
            if L >= 1:
                bc = check_mattner_roos(q, L)
                out.setdefault("_slack", bc.slack)
                if not bc.holds:
                    found.append({"value": bc.value, "bound": bc.bound, "slack": bc.slack})
        else:
            raise ValueError(f"unknown check {name!r}")
        out[name] = found
    return q, L, out


def run_scan(
    q_range: Sequence[int],
    L_range: Sequence[int],
    checks: Sequence[str] = CHECKS,
    jobs: int = 1,
) -> dict[str, ScanResult]:
    """Run ``checks`` on every pair of the grid.

    For ``mattner-roos`` the result's ``extra`` holds the minimum slack and
    the pair attaining it.
    """
    for c in checks:
        if c not in CHECKS:
            raise ValueError(f"unknown check {c!r}; choose from {', '.join(CHECKS)}")
    tasks = [(q, L, tuple(checks)) for q in q_range for L in L_range]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_check_pair, tasks, chunksize=8))
    else:
        rows = [_check_pair(t) for t in tasks]

    results = {c: ScanResult(c) for c in checks}
    for q, L, out in rows:
        slack = out.pop("_slack", None)
        for name, found in out.items():
            res = results[name]
            res.pairs_checked += 1
            for f in found:
                res.violations.append({"q": q, "L": L, **f})
        if slack is not None:
            mr = results["mattner-roos"].extra
            if "min_slack" not in mr or slack < mr["min_slack"]:
                mr["min_slack"] = slack
                mr["argmin"] = {"q": q, "L": L}
    return results
