"""Command line front end.

    pinchcalc invariants P Q [--format json|csv|table]
    pinchcalc pinch P Q
    pinchcalc synthesize --p0 P0 --q1 Q1 --eps E1,...,En [--ms M1,...,M(n-1)]
    pinchcalc scan --pmax N --qmax N [--filter F] [--format csv|json] [--jobs N]
    pinchcalc selftest [--pmax N] [--qmax N] [--oracle-cap C]

Exit codes: 0 success, 1 self-test failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .classify import Tag, classify
from .core import PinchCalcError, TorusKnot, normalize
from .invariants import report
from .pinch import SeedData, pinch_move, pinch_sequence, synthesize
from .selftest import run_selftest, scan_knots

FIELDS = (
    "p",
    "q",
    "mirrored",
    "n",
    "sigma",
    "upsilon",
    "gap",
    "oss_lower",
    "gamma4_predicted",
    "gamma4_lower",
    "gamma4_upper",
    "classification",
)

FILTERS = {
    "all": None,
    "verified": Tag.VERIFIED,
    "gap-n-1": Tag.GAP_N_MINUS_ONE,
    "moebius": Tag.MOEBIUS,
    "counterexample": Tag.COUNTEREXAMPLE,
    "bounds-only": Tag.BOUNDS_ONLY,
}

SCAN_CAP = 2000


class UsageError(Exception):
    pass


def record(knot: TorusKnot, check: bool = False) -> Dict[str, object]:
    """One output row.  Values are those of the positive knot; see ``mirrored``."""
    rep = report(knot, check=check)
    cls = classify(knot)
    return {
        "p": knot.p,
        "q": knot.q,
        "mirrored": knot.mirrored,
        "n": rep.n,
        "sigma": rep.positive_sigma,
        "upsilon": rep.positive_upsilon,
        "gap": rep.gap,
        "oss_lower": rep.oss_lower,
        "gamma4_predicted": rep.gamma4_conjectured,
        "gamma4_lower": rep.gamma4_lower,
        "gamma4_upper": rep.gamma4_upper,
        "classification": cls.tag.value,
    }


def _csv_value(v: object) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def format_records(rows: Sequence[Dict[str, object]], fmt: str, header: bool = True) -> str:
    if fmt == "json":
        return "".join(json.dumps(r) + "\n" for r in rows)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if header:
            writer.writerow(FIELDS)
        for r in rows:
            writer.writerow([_csv_value(r[f]) for f in FIELDS])
        return buf.getvalue()
    table = [FIELDS] + [tuple(_csv_value(r[f]) for f in FIELDS) for r in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(FIELDS))]
    return "".join(
        "  ".join(cell.rjust(w) for cell, w in zip(row, widths)) + "\n" for row in table
    )


def _parse_signs(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def _knot(p: int, q: int) -> TorusKnot:
    try:
        return normalize(p, q)
    except PinchCalcError as exc:
        raise UsageError(str(exc)) from None


def cmd_invariants(args, out) -> int:
    knot = _knot(args.p, args.q)
    out.write(format_records([record(knot, check=True)], args.format))
    return 0


def cmd_pinch(args, out) -> int:
    knot = _knot(args.p, args.q)
    seq = pinch_sequence(knot)
    raw = (abs(args.p), abs(args.q))
    for i, step in enumerate(seq.steps):
        (p, q), (r, s) = step.source, step.target
        if i == 0 and raw != (p, q):
            # Show the move on the pair as typed; it lands on the same knot.
            (p, q), (r, s) = raw, pinch_move(raw).target
        out.write(f"T({p},{q}) --{step.epsilon:+d}--> T({r},{s})\n")
    seed = {
        "n": seq.n,
        "p0": seq.p0,
        "q1": seq.q1,
        "eps": list(seq.epsilons),
        "ms": list(seq.ms),
    }
    out.write("seed " + json.dumps(seed) + "\n")
    return 0


def cmd_synthesize(args, out) -> int:
    eps = _parse_signs(args.eps)
    ms = _parse_signs(args.ms) if args.ms else ()
    seed = SeedData(len(eps), args.p0, args.q1, eps, ms)
    try:
        seq = synthesize(seed)
    except PinchCalcError as exc:
        clause = getattr(exc, "clause", "")
        raise UsageError(f"constraint {clause} violated: {exc}" if clause else str(exc)) from None
    knot = seq.top
    if pinch_sequence(knot) != seq:
        raise AssertionError(f"round trip failed for {knot}")
    out.write(f"{knot}\n")
    out.write(format_records([record(knot, check=True)], args.format))
    return 0


def _records_chunk(pairs: Sequence[Tuple[int, int]]) -> List[Dict[str, object]]:
    return [record(TorusKnot(p, q)) for p, q in pairs]


def iter_scan(pmax: int, qmax: int, jobs: int = 1, chunk: int = 256) -> Iterator[Dict[str, object]]:
    pairs = [k.pair for k in scan_knots(pmax, qmax)]
    chunks = [pairs[i:i + chunk] for i in range(0, len(pairs), chunk)]
    if jobs <= 1:
        for c in chunks:
            yield from _records_chunk(c)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_records_chunk, chunks):
            yield from rows


def cmd_scan(args, out) -> int:
    if args.pmax < 2 or args.qmax < 2:
        raise UsageError("scan bounds must be >= 2")
    if args.pmax > SCAN_CAP or args.qmax > SCAN_CAP:
        raise UsageError(f"scan bounds are capped at {SCAN_CAP}")
    wanted = FILTERS[args.filter]
    first = True
    for row in iter_scan(args.pmax, args.qmax, args.jobs):
        if wanted is not None and row["classification"] != wanted.value:
            continue
        out.write(format_records([row], args.format, header=first))
        first = False
    if first and args.format == "csv":
        out.write(format_records([], "csv"))
    return 0


def cmd_selftest(args, out) -> int:
    summary = run_selftest(args.pmax, args.qmax, args.oracle_cap)
    out.write(summary.render())
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pinchcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    inv = sub.add_parser("invariants", help="invariants of one torus knot")
    inv.add_argument("p", type=int)
    inv.add_argument("q", type=int)
    inv.add_argument("--format", choices=("json", "csv", "table"), default="table")
    inv.set_defaults(func=cmd_invariants)

    pin = sub.add_parser("pinch", help="pinch sequence of one torus knot")
    pin.add_argument("p", type=int)
    pin.add_argument("q", type=int)
    pin.set_defaults(func=cmd_pinch)

    syn = sub.add_parser("synthesize", help="build a torus knot from its pinch data")
    syn.add_argument("--p0", type=int, required=True)
    syn.add_argument("--q1", type=int, required=True)
    syn.add_argument("--eps", required=True, help="comma separated signs eps_1..eps_n")
    syn.add_argument("--ms", default="", help="comma separated even integers m_1..m_(n-1)")
    syn.add_argument("--format", choices=("json", "csv", "table"), default="table")
    syn.set_defaults(func=cmd_synthesize)

    scan = sub.add_parser("scan", help="tabulate every torus knot in a range")
    scan.add_argument("--pmax", type=int, required=True)
    scan.add_argument("--qmax", type=int, required=True)
    scan.add_argument("--filter", choices=tuple(FILTERS), default="all")
    scan.add_argument("--format", choices=("csv", "json"), default="csv")
    scan.add_argument("--jobs", type=int, default=1)
    scan.set_defaults(func=cmd_scan)

    st = sub.add_parser("selftest", help="run the cross-check suite")
    st.add_argument("--pmax", type=int, default=60)
    st.add_argument("--qmax", type=int, default=60)
    st.add_argument("--oracle-cap", type=int, default=None)
    st.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"pinchcalc: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
