"""Command-line front end: ``ordmult <command> [options]``.

Exact values are written losslessly: rationals as ``"p/q"`` strings, integers
as decimal strings. Floats are written as ``{"value": "...",
"precision_digits": d}``. Exit status is 0 when every requested check
passes, 1 when one fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import enum
import json
import sys
import time
from fractions import Fraction

import mpmath

from . import generalized as gen
from .convolution import check_mattner_roos, max_prob, pmf
from .core import (
    expand_row,
    index_set,
    mode_formula,
    modes,
    smallest_mode,
    verify_mode_recurrence,
)
from .scans import CHECKS, run_scan

FLOAT_DIGITS = 30


def jsonable(obj, digits: int = FLOAT_DIGITS):
    """Convert results to JSON-ready data without losing exact values."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, (float, mpmath.mpf)):
        return {"value": mpmath.nstr(mpmath.mpf(obj), digits), "precision_digits": digits}
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, str):
        return obj
    if dataclasses.is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name), digits) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, range)):
        return [jsonable(v, digits) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def parse_range(text: str) -> range:
    """``"3"`` or ``"1..8"`` (inclusive); ``"5..4"`` is the empty range."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 1/2, got {text!r}") from None


def positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def nonneg_int(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def emit(record: dict, fmt: str, out) -> None:
    elapsed = record.pop("elapsed_s", None)
    params = record.pop("params")
    data = jsonable(record)
    data["params"] = {
        k: v if isinstance(v, (int, float, str)) or v is None else jsonable(v)
        for k, v in params.items()
    }
    if elapsed is not None:
        data["elapsed_s"] = round(elapsed, 6)
    if fmt == "json":
        json.dump(data, out, indent=2)
        out.write("\n")
        return
    for key in ("command", "verdict"):
        out.write(f"{key}: {data[key]}\n")
    for key, val in data["params"].items():
        out.write(f"  {key} = {val}\n")
    _plain(data["results"], out, indent=0)


def _plain(data, out, indent):
    pad = "  " * indent
    if isinstance(data, dict) and set(data) == {"value", "precision_digits"}:
        out.write(f"{pad}{data['value']}\n")
    elif isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and not (
                isinstance(v, dict) and set(v) == {"value", "precision_digits"}
            ):
                out.write(f"{pad}{k}:\n")
                _plain(v, out, indent + 1)
            else:
                shown = v["value"] if isinstance(v, dict) else v
                out.write(f"{pad}{k}: {shown}\n")
    elif isinstance(data, list):
        if all(not isinstance(v, (dict, list)) for v in data):
            out.write(pad + " ".join(str(v) for v in data) + "\n")
        else:
            for v in data:
                _plain(v, out, indent)
    else:
        out.write(f"{pad}{data}\n")


# commands


def cmd_triangle(args, out):
    rows = []
    for L in range(args.rows + 1):
        row = expand_row(args.q, L)
        m = modes(args.q, L)
        rows.append({"L": L, "coeffs": row.coeffs, "modes": m.mode_indices, "kind": m.kind})
    if args.format == "json":
        return {"results": {"rows": rows}, "verdict": None}
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["L", "k", "value", "is_mode"])
        for r in rows:
            for k, v in enumerate(r["coeffs"]):
                w.writerow([r["L"], k, v, int(k in r["modes"])])
        return None
    width = len(str(max(rows[-1]["coeffs"]))) + 2
    for r in rows:
        cells = [
            (f"[{v}]" if k in r["modes"] else str(v)).rjust(width)
            for k, v in enumerate(r["coeffs"])
        ]
        out.write(f"{r['L']:>3} |" + "".join(cells) + "\n")
    return None


def cmd_mode(args, out):
    m = modes(args.q, args.L)
    k = mode_formula(args.q, args.L)
    res = {
        "mode_indices": m.mode_indices,
        "kind": m.kind,
        "max_value": m.max_value,
        "formula_mode": k,
        "formula_in_modes": k in m.mode_indices,
        "smallest_mode": smallest_mode(args.q, args.L),
    }
    verdict = res["formula_in_modes"]
    if args.L >= 1:
        res["index_set"] = index_set(args.q, args.L).offsets
        res["recurrence_holds"] = verify_mode_recurrence(args.q, args.L)
        verdict = verdict and res["recurrence_holds"]
    return {"results": res, "verdict": verdict}


def cmd_cmax(args, out):
    mp = max_prob(args.q, args.L)
    res = {
        "value": mp.value,
        "unreduced": f"{expand_row(args.q, args.L).coeffs[mp.arg]}/{(args.q + 1) ** args.L}",
        "arg": mp.arg,
        "mode_indices": mp.mode_indices,
        "scan_value": mp.scan_value,
        "formula_matches_scan": mp.agrees,
    }
    if args.L >= 1:
        bc = check_mattner_roos(args.q, args.L)
        res["mattner_roos"] = {"holds": bc.holds, "bound": bc.bound, "slack": bc.slack}
    return {"results": res, "verdict": mp.agrees}


def cmd_pmf(args, out):
    table = pmf(args.q, args.L)
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["k", "probability"])
        for k, p in enumerate(table.probs):
            w.writerow([k, f"{p.numerator}/{p.denominator}"])
        return None
    return {
        "results": {"probs": table.probs, "total": sum(table.probs, Fraction(0))},
        "verdict": None,
    }


def cmd_scan(args, out):
    checks = args.check or ["slc"]
    results = run_scan(args.q, args.L, checks, jobs=args.jobs)
    res = {
        name: {
            "pairs_checked": r.pairs_checked,
            "violation_count": len(r.violations),
            "violations": r.violations,
            **r.extra,
        }
        for name, r in results.items()
    }
    return {"results": res, "verdict": all(r.passed for r in results.values())}


def _report_record(reports):
    def one(r):
        d = {
            "name": r.name,
            "exact": r.exact,
            "passed": r.passed,
            "terms_used": r.terms_used,
            "difference": r.difference,
            "tolerance": r.tolerance,
            "details": r.details,
        }
        d["lhs"], d["rhs"] = r.lhs, r.rhs
        return d

    return {"results": {"reports": [one(r) for r in reports]},
            "verdict": all(r.passed for r in reports)}


def cmd_verify(args, out):
    name = args.identity
    if name == "g2":
        reports = [gen.verify_g2_closed_form(args.order)]
    elif name == "g4":
        reports = [gen.verify_g4_closed_form(args.t0, args.order, args.tol, args.depth)]
    elif name == "corollary-sums":
        reports = list(gen.verify_corollary_sums(
            args.order, args.tol, args.depth, first_N=args.order, first_tolerance=args.tol
        ))
    elif name == "c4n":
        reports = [gen.verify_c4n_reconstruction(args.t0, args.order, args.tol)]
    elif name == "lemma":
        reports = [gen.verify_lemma(args.z, args.q, args.order)]
    elif name == "gf":
        reports = [gen.verify_gf(args.z, args.q, args.order)]
    elif name == "lagrange":
        reports = [gen.verify_lagrange(args.z, args.q, args.order)]
    elif name == "gq":
        reports = [gen.verify_gq_parametric(args.q, args.t0, args.order, args.tol)]
    else:  # argparse restricts choices
        raise ValueError(name)
    return _report_record(reports)


def cmd_series(args, out):
    if args.kind == "power":
        coeffs = gen.gen_multinomial_series(args.z, args.q, args.order)
    elif args.kind == "lagrange":
        coeffs = gen.lagrange_sequence(args.z, args.q, args.order)
    else:
        terms = gen.g_q_series(args.q, args.order)
        return {"results": {"terms": [
            {"n": g.n, "coefficient": g.coefficient, "exponent": g.exponent, "value": g.value}
            for g in terms
        ]}, "verdict": None}
    return {"results": {"coefficients": coeffs}, "verdict": None}


IDENTITIES = ("g2", "g4", "corollary-sums", "c4n", "lemma", "gf", "lagrange", "gq")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ordmult",
        description="Ordinary multinomials, uniform convolution powers and their generating functions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("triangle", help="rows 0..ROWS of the q-nomial triangle, modes bracketed")
    s.add_argument("--q", type=positive_int, required=True)
    s.add_argument("--rows", type=nonneg_int, required=True)
    s.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    s.set_defaults(func=cmd_triangle)

    for name, func, helptext in (
        ("mode", cmd_mode, "mode set, closed-form mode and mode recurrence"),
        ("cmax", cmd_cmax, "maximal probability c_{q,L} and the Mattner-Roos bound"),
        ("pmf", cmd_pmf, "exact pmf of the L-fold uniform convolution"),
    ):
        s = sub.add_parser(name, help=helptext)
        s.add_argument("--q", type=positive_int, required=True)
        s.add_argument("--L", type=nonneg_int, required=True)
        s.add_argument("--format", choices=("json", "plain", "csv") if name == "pmf" else ("json", "plain"),
                       default="json")
        s.set_defaults(func=func)

    s = sub.add_parser("scan", help="property scan over a (q, L) grid")
    s.add_argument("--q", type=parse_range, required=True, help="N or A..B")
    s.add_argument("--L", type=parse_range, required=True, help="N or A..B")
    s.add_argument("--check", action="append", choices=CHECKS,
                   help="repeatable; default slc")
    s.add_argument("--jobs", type=positive_int, default=1)
    s.add_argument("--format", choices=("json", "plain"), default="json")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("verify", help="check a generating-function identity")
    s.add_argument("identity", choices=IDENTITIES)
    s.add_argument("--order", "--terms", dest="order", type=nonneg_int, default=100,
                   help="truncation order / number of terms (default 100)")
    s.add_argument("--tol", type=float, default=1e-8, help="numeric tolerance (default 1e-8)")
    s.add_argument("--depth", type=nonneg_int, default=20,
                   help="Euler averaging depth for alternating sums (default 20)")
    s.add_argument("--t0", type=float, default=0.5)
    s.add_argument("--z", type=parse_fraction, default=Fraction(1, 2))
    s.add_argument("--q", type=positive_int, default=4)
    s.add_argument("--format", choices=("json", "plain"), default="json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("series", help="exact generating-function coefficients")
    s.add_argument("--kind", choices=("power", "lagrange", "gq"), default="power",
                   help="power: (1+t+..+t^q)^z; lagrange: binom(nz,n)_q; gq: c_{q,2n/q}")
    s.add_argument("--q", type=positive_int, required=True)
    s.add_argument("--z", type=parse_fraction, default=Fraction(1))
    s.add_argument("--order", type=nonneg_int, default=10)
    s.add_argument("--format", choices=("json", "plain"), default="json")
    s.set_defaults(func=cmd_series)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    params = {
        k: (f"{v.start}..{v.stop - 1}" if isinstance(v, range) else v)
        for k, v in vars(args).items()
        if k not in ("func", "command", "format")
    }
    start = time.perf_counter()
    try:
        record = args.func(args, out)
    except ValueError as exc:
        print(f"ordmult {args.command}: error: {exc}", file=sys.stderr)
        return 2
    if record is None:
        return 0
    full = {
        "command": args.command,
        "params": params,
        "results": record["results"],
        "verdict": record["verdict"],
        "elapsed_s": time.perf_counter() - start,
    }
    emit(full, args.format, out)
    return 1 if record["verdict"] is False else 0


if __name__ == "__main__":
    sys.exit(main())
