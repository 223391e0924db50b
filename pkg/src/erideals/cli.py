"""``erideals`` command line: sample, analyze, mc, sweep, oracle, verify.

Exit codes: 0 success, 1 failed check or unreadable input, 2 bad arguments,
3 resource limit exceeded.  Relative ``--output`` paths are resolved against
``$ERIDEALS_OUTPUT_DIR`` when it is set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .errors import GraphFormatError, ParameterError, ResourceLimitError
from .events import EVENT_NAMES, EventSpec
from .graph import (
    Graph,
    Pattern,
    format_graph_text,
    graph_to_json,
    parse_graph_json,
    parse_graph_text,
    sample_er,
)
from .ideals import cover_ideal, edge_ideal, ideal_height, krull_dimension, reg_upper_bound, v_upper_bound
from .moments import (
    PUBLISHED_T_COEFFICIENT,
    chebyshev_lb_Et,
    chebyshev_lb_T,
    expectation_Y_Et,
    expectation_Y_T_paper,
    markov_ub_Et,
)
from .montecarlo import SweepRecord, estimate, sweep
from .normality import cover_ideal_normality, find_hochster
from .oracle import DEFAULT_CAP, count_labeled_copies, enumerate_event, enumerate_expectation

OUTPUT_DIR_ENV = "ERIDEALS_OUTPUT_DIR"

ANALYZE_FIELDS = (
    "dim",
    "height",
    "edge_ideal_normal",
    "hochster",
    "cover_normality",
    "reg_upper_bound",
    "v_upper_bound",
    "edge_ideal",
    "cover_ideal",
)


# -- helpers --------------------------------------------------------------------

def _output_path(path: str) -> Path:
    out = Path(path)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not out.is_absolute():
        out = Path(base) / out
    return out


def _emit(text: str, output: str | None) -> None:
    if output is None or output == "-":
        sys.stdout.write(text)
        return
    path = _output_path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _probability(text: str) -> Fraction:
    try:
        p = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0 <= p <= 1:
        raise argparse.ArgumentTypeError(f"probability {text} outside [0, 1]")
    return p


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _confidence(text: str) -> float:
    value = float(text)
    if not 0 < value < 1:
        raise argparse.ArgumentTypeError("confidence must lie strictly between 0 and 1")
    return value


def _event(text: str) -> EventSpec:
    try:
        return EventSpec.parse(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pattern(text: str) -> Pattern:
    try:
        return Pattern.parse(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _n_list(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("empty list")
    return values


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    if text.lstrip().startswith("{") or path.endswith(".json"):
        return parse_graph_json(text)
    return parse_graph_text(text)


# -- commands -------------------------------------------------------------------

def cmd_sample(args) -> int:
    graphs = [sample_er(args.n, float(args.p), args.seed, i) for i in range(args.count)]
    chunks = []
    for i, g in enumerate(graphs):
        if args.format == "json":
            rec = {"trial": i, "seed": args.seed, "p": float(args.p), "graph": graph_to_json(g)}
            if args.ideals:
                rec["edge_ideal"] = edge_ideal(g).to_json()
                rec["cover_ideal"] = cover_ideal(g).to_json()
            chunks.append(json.dumps(rec) + "\n")
        else:
            text = format_graph_text(g)
            if args.ideals:
                text += f"# edge ideal: {json.dumps(edge_ideal(g).to_json())}\n"
                text += f"# cover ideal: {json.dumps(cover_ideal(g).to_json())}\n"
            chunks.append(text)
    _emit("".join(chunks), args.output)
    return 0


def analyze_graph(g: Graph, fields=ANALYZE_FIELDS) -> dict:
    """Report the requested invariants of ``g`` as a JSON-ready dict."""
    out: dict = {"n": g.n, "m": g.m}
    witness = find_hochster(g) if {"edge_ideal_normal", "hochster"} & set(fields) else None
    for f in fields:
        if f == "dim":
            out["dim"] = krull_dimension(g)
        elif f == "height":
            out["height"] = ideal_height(g)
        elif f == "edge_ideal_normal":
            out["edge_ideal_normal"] = witness is None
        elif f == "hochster":
            out["hochster"] = witness.to_json() if witness else None
        elif f == "cover_normality":
            out["cover_normality"] = str(cover_ideal_normality(g))
        elif f == "reg_upper_bound":
            out["reg_upper_bound"] = reg_upper_bound(g)
        elif f == "v_upper_bound":
            out["v_upper_bound"] = v_upper_bound(g)
        elif f == "edge_ideal":
            ideal = edge_ideal(g)
            out["edge_ideal"] = ideal.to_json() | {"text": str(ideal)}
        elif f == "cover_ideal":
            ideal = cover_ideal(g)
            out["cover_ideal"] = ideal.to_json() | {"text": str(ideal)}
    return out


def cmd_analyze(args) -> int:
    fields = ANALYZE_FIELDS
    if args.checks:
        fields = tuple(f.strip() for f in args.checks.split(",") if f.strip())
        unknown = [f for f in fields if f not in ANALYZE_FIELDS]
        if unknown:
            raise ParameterError(f"unknown check(s) {unknown}; known: {', '.join(ANALYZE_FIELDS)}")
    g = _read_graph(args.graph)
    _emit(_dump_json(analyze_graph(g, fields)), args.output)
    return 0


def cmd_mc(args) -> int:
    est = estimate(args.n, float(args.p), args.event, args.trials, args.seed, args.confidence, args.jobs)
    head = {"n": args.n, "p": float(args.p), "event": str(args.event), "seed": args.seed}
    if args.format == "json":
        text = _dump_json(head | est.to_json())
    else:
        rec = head | est.to_json()
        text = _csv_text(list(rec), [[repr(v) if isinstance(v, float) else v for v in rec.values()]])
    _emit(text, args.output)
    return 0


def cmd_sweep(args) -> int:
    records = sweep(
        args.event, args.schedule, args.n, args.trials, args.seed, args.confidence, args.jobs,
        timing=not args.no_timing,
    )
    if args.format == "json":
        text = _dump_json([r.to_json() for r in records])
    else:
        text = _csv_text(SweepRecord.CSV_FIELDS, [r.csv_row() for r in records])
    _emit(text, args.output)
    return 0


def _fmt(x) -> str:
    return repr(float(x))


def _compare_rows(args, poly, p_values):
    """Rows ``(p, oracle, formula, lower, upper, status)`` for ``--compare``."""
    n, pat = args.n, args.pattern
    rows = []
    for p in p_values:
        oracle = poly.evaluate(p)
        if args.expectation:
            if pat.kind == "T":
                formula = expectation_Y_T_paper(n, p) if n >= 6 else None
            else:
                formula = expectation_Y_Et(n, pat.t, p)
            status = "n/a" if formula is None else ("match" if formula == oracle else "MISMATCH")
            rows.append((p, oracle, formula, None, None, status))
            continue
        # probability that at least one induced copy exists, against its bounds
        if pat.kind == "T":
            upper = expectation_Y_T_paper(n, p) if n >= 6 else None
            try:
                lower = chebyshev_lb_T(n, p) if n >= 6 else None
            except ParameterError:
                lower = None
        else:
            upper = markov_ub_Et(n, pat.t, p)
            try:
                lower = chebyshev_lb_Et(n, pat.t, p)
            except ParameterError:
                lower = None
        inside = (lower is None or lower <= oracle) and (upper is None or oracle <= upper)
        rows.append((p, oracle, None, lower, upper, "within" if inside else "VIOLATED"))
    return rows


def cmd_oracle(args) -> int:
    if (args.event is None) == (args.pattern is None):
        raise ParameterError("give exactly one of --event or --pattern")
    if args.pattern is None and (args.expectation or args.compare):
        raise ParameterError("--expectation and --compare need --pattern")
    if args.pattern is not None and args.n < args.pattern.order:
        raise ParameterError(f"pattern {args.pattern} needs n >= {args.pattern.order}")
    if args.event is not None:
        target = str(args.event)
        poly = enumerate_event(args.n, args.event, args.cap, args.jobs)
    elif args.expectation:
        target = f"E[Y_{args.pattern}]"
        poly = enumerate_expectation(args.n, args.pattern, args.cap, args.jobs)
    else:
        target = f"P(Y_{args.pattern} > 0)"
        ev = EventSpec("has_T_induced") if args.pattern.kind == "T" else EventSpec("has_Et_induced", args.pattern.t)
        poly = enumerate_event(args.n, ev, args.cap, args.jobs)

    p_values = args.p or ([Fraction(k, 10) for k in range(1, 10)] if args.compare else [])
    record: dict = {"target": target} | poly.to_json()
    rows = []
    if args.compare:
        rows = _compare_rows(args, poly, p_values)
        record["comparison"] = [
            {
                "p": _fmt(p),
                "oracle": _fmt(o),
                "formula": None if f is None else _fmt(f),
                "lower_bound": None if lo is None else _fmt(lo),
                "upper_bound": None if hi is None else _fmt(hi),
                "status": s,
            }
            for p, o, f, lo, hi, s in rows
        ]
        if args.pattern.kind == "T" and args.expectation and args.n == 6:
            kappa = count_labeled_copies(args.pattern, 6)
            record["T_coefficient"] = {
                "oracle": poly.coeffs[6],
                "labeled_copies": kappa,
                "published": PUBLISHED_T_COEFFICIENT,
                "agrees": poly.coeffs[6] == PUBLISHED_T_COEFFICIENT,
            }
    elif p_values:
        record["values"] = [{"p": _fmt(p), "value": _fmt(poly.evaluate(p))} for p in p_values]

    if args.format == "json":
        text = _dump_json(record)
    elif args.compare:
        text = _csv_text(
            ("p", "oracle", "formula", "lower_bound", "upper_bound", "status"),
            [[_fmt(p), _fmt(o)] + ["" if x is None else _fmt(x) for x in (f, lo, hi)] + [s] for p, o, f, lo, hi, s in rows],
        )
        if "T_coefficient" in record:
            c = record["T_coefficient"]
            text += f"# T coefficient: oracle {c['oracle']}, published {c['published']}\n"
    else:
        text = _csv_text(("m", "coeff"), poly.csv_rows())
    _emit(text, args.output)
    if args.compare and any(r[-1] in ("MISMATCH", "VIOLATED") for r in rows):
        print("note: formula and exact enumeration disagree at some p (see status column)", file=sys.stderr)
    return 0


def cmd_verify(args) -> int:
    from .acceptance import run_checks

    only = [tok.strip() for item in args.only or [] for tok in item.split(",") if tok.strip()]
    try:
        results = run_checks(only or None, seed=args.seed, jobs=args.jobs)
    except KeyError as exc:
        raise ParameterError(exc.args[0]) from None
    failed = [r.name for r in results if not r.ok]
    info = [r.name for r in results if r.status == "INFO"]
    print(f"{len(results) - len(failed)}/{len(results)} checks passed" + (f" ({len(info)} informational)" if info else ""))
    if failed:
        print("failed: " + ", ".join(failed))
        return 1
    return 0


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .acceptance import DEFAULT_SEED

    parser = argparse.ArgumentParser(prog="erideals", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=True, jobs=True, fmt=None):
        if seed:
            p.add_argument("--seed", type=_nonneg, default=0)
        if jobs:
            p.add_argument("--jobs", type=_positive, default=1, help="worker processes (results do not depend on it)")
        if fmt:
            p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--output", "-o", default=None, help="output file (default stdout)")

    p = sub.add_parser("sample", help="draw G(n, p) graphs")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--ideals", action="store_true", help="also emit edge and cover ideals")
    common(p, jobs=False, fmt=("text", "json"))
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("analyze", help="invariants of a graph file ('-' for stdin)")
    p.add_argument("graph")
    p.add_argument("--checks", help=f"comma separated subset of: {', '.join(ANALYZE_FIELDS)}")
    p.add_argument("--output", "-o", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("mc", help="Monte Carlo estimate of an event probability")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--event", type=_event, required=True, help=f"one of {', '.join(EVENT_NAMES)} (':t' for parametric, 'not:' prefix)")
    p.add_argument("--trials", type=_positive, default=10000)
    p.add_argument("--confidence", type=_confidence, default=0.95)
    common(p, fmt=("json", "csv"))
    p.set_defaults(func=cmd_mc)

    p = sub.add_parser("sweep", help="estimates along an edge-probability schedule")
    p.add_argument("--event", type=_event, required=True)
    p.add_argument("--schedule", required=True, help="e.g. 'q=1*n^-0.5' or 'p=2*n^-1'")
    p.add_argument("--n", type=_n_list, required=True, help="ascending comma separated list")
    p.add_argument("--trials", type=_positive, default=10000)
    p.add_argument("--confidence", type=_confidence, default=0.95)
    p.add_argument("--no-timing", action="store_true", help="leave the seconds column empty")
    common(p, fmt=("csv", "json"))
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("oracle", help="exact probability polynomial by enumeration")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--event", type=_event)
    p.add_argument("--pattern", type=_pattern, help="T or E<t>")
    p.add_argument("--expectation", action="store_true", help="expected number of induced copies")
    p.add_argument("--compare", action="store_true", help="compare with the closed forms")
    p.add_argument("--p", type=_probability, action="append", help="evaluation point (repeatable)")
    p.add_argument("--cap", type=_nonneg, default=DEFAULT_CAP)
    common(p, seed=False, fmt=("json", "csv"))
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="run the acceptance checks")
    p.add_argument("--only", action="append", help="check names or tags, comma separated")
    p.add_argument("--seed", type=_nonneg, default=DEFAULT_SEED)
    p.add_argument("--jobs", type=_positive, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"erideals: resource limit: {exc}", file=sys.stderr)
        return 3
    except GraphFormatError as exc:
        print(f"erideals: {exc}", file=sys.stderr)
        return 1
    except ParameterError as exc:
        print(f"erideals {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"erideals: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
