"""Command-line front end: compare, sort, scores, cuts, decide, emit-curve.

Exit codes: 0 success, 2 usage, 3 validation/domain errors, 4 internal.
All values are exact internally; --prec rounds (half to even) only at output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import golden
from .cuts import cut, strong_cut
from .decision import load_system, run_algorithm
from .errors import (
    CertificateInapplicableError,
    DimensionError,
    DomainError,
    IfnValidationError,
    KindMismatchError,
    ParseError,
    WeightSumError,
)
from .ifn import Ifn, IfnKind, ifn_from_compact, ifn_from_dict, ifn_to_compact, sample_curve
from .ordering import DEFAULT_DEPTH, Relation, compare, sort_ifns
from .rational import as_rational, exact_str, format_rational
from .scores import (
    LEGACY_METHODS,
    ivif_scores,
    quad_at,
    triangular_scores,
)
from .sequences import DEFAULT_SEQUENCE, from_spec

VALIDATION_ERRORS = (
    IfnValidationError,
    ParseError,
    DomainError,
    WeightSumError,
    KindMismatchError,
    CertificateInapplicableError,
    DimensionError,
)


def read_ifn(token: str) -> Ifn:
    """Resolve an IFN argument: a file path, a JSON literal, or a compact literal."""
    text = token
    if os.path.exists(token):
        with open(token, encoding="utf-8") as fh:
            text = fh.read()
    text = text.strip()
    if text.startswith("{"):
        try:
            doc = json.loads(text, parse_float=Fraction, parse_int=Fraction)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON literal {token!r}: {exc}") from exc
        return ifn_from_dict(doc)
    if text.startswith(("<", "⟨")):
        return ifn_from_compact(text)
    raise ParseError(f"cannot interpret {token!r} as an IFN literal or file")


def _emit(doc, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2))
    else:
        _emit_table(doc)


def _emit_table(doc, indent: str = "") -> None:
    if isinstance(doc, dict):
        for key, value in doc.items():
            if isinstance(value, (dict, list)):
                print(f"{indent}{key}:")
                _emit_table(value, indent + "  ")
            else:
                print(f"{indent}{key}: {value}")
    elif isinstance(doc, list):
        for value in doc:
            if isinstance(value, (dict, list)):
                _emit_table(value, indent + "  ")
                print()
            else:
                print(f"{indent}{value}")
    else:
        print(f"{indent}{doc}")


def _verdict_doc(verdict, places: int) -> dict:
    doc = {"verdict": verdict.relation.value}
    if verdict.relation in (Relation.LESS, Relation.GREATER):
        doc["j"] = verdict.j
        doc["cj_a"] = format_rational(verdict.c_a, places)
        doc["cj_b"] = format_rational(verdict.c_b, places)
    elif verdict.relation is Relation.EQUIVALENT:
        doc["certified"] = verdict.certified
    else:
        doc["depth"] = verdict.depth
    return doc


def cmd_compare(args) -> int:
    seq = from_spec(args.seq)
    a = read_ifn(args.a)
    b = read_ifn(args.b)
    verdict = compare(a, b, seq=seq, max_depth=args.depth)
    _emit(_verdict_doc(verdict, args.prec), args.format)
    return 0


def cmd_sort(args) -> int:
    seq = from_spec(args.seq)
    with open(args.items, encoding="utf-8") as fh:
        doc = json.load(fh, parse_float=Fraction, parse_int=Fraction)
    if not isinstance(doc, list) or not doc:
        raise ParseError(f"{args.items}: expected a nonempty JSON array of IFN literals")
    items = [
        ifn_from_compact(entry) if isinstance(entry, str) else ifn_from_dict(entry)
        for entry in doc
    ]
    groups = sort_ifns(items, seq=seq, max_depth=args.depth)
    out = {
        "order": "ascending",
        "groups": [
            {
                "rank": rank,
                "items": [ifn_to_compact(x) for x in group.items],
                "indistinguishable": group.indistinguishable,
            }
            for rank, group in enumerate(groups, start=1)
        ],
    }
    _emit(out, args.format)
    return 0


def _scores_for(ifn: Ifn, methods: list[str], places: int, explicit: bool) -> dict:
    fmt = lambda v: format_rational(v, places)
    quad = quad_at(ifn, 1, 1)
    doc = {
        "input": ifn_to_compact(ifn),
        "kind": ifn.kind.value,
        "c": [fmt(v) for v in quad.as_tuple()],
    }
    if ifn.mu.is_flat and ifn.nu.is_flat:
        iv = ivif_scores((ifn.mu.q1, ifn.mu.q3), (ifn.nu.q1, ifn.nu.q3))
        doc["ivif"] = {"L": fmt(iv.L), "LG": fmt(iv.LG), "P": fmt(iv.P), "IP": fmt(iv.IP)}
    if ifn.mu.is_triangle and ifn.nu.is_triangle:
        tri = triangular_scores(ifn)
        doc["triangular"] = {"T": fmt(tri.T), "NT": fmt(tri.NT), "NTc": fmt(tri.NTc)}
    legacy = {}
    for name in methods:
        fn = LEGACY_METHODS[name]
        try:
            value = fn(ifn)
        except KindMismatchError:
            if explicit:
                raise
            legacy[name] = None
            continue
        if isinstance(value, Fraction):
            legacy[name] = fmt(value)
        else:
            # similarity degrees are irrational; round their float image
            legacy[name] = f"{float(value):.{places}f}"
    if legacy:
        doc["legacy"] = legacy
    return doc


def cmd_scores(args) -> int:
    places = args.prec
    if args.method == "all":
        methods = list(LEGACY_METHODS)
        explicit = False
    elif args.method == "none":
        methods = []
        explicit = False
    else:
        methods = [m.strip() for m in args.method.split(",")]
        for m in methods:
            if m not in LEGACY_METHODS:
                raise ParseError(
                    f"unknown method {m!r}; choose from {', '.join(LEGACY_METHODS)}"
                )
        explicit = True
    rows = [_scores_for(read_ifn(token), methods, places, explicit) for token in args.ifns]
    _emit(rows, args.format)
    return 0


def _parse_level_pair(text: str) -> tuple[Fraction, Fraction]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError(f"expected 'alpha,beta', got {text!r}")
    return as_rational(parts[0]), as_rational(parts[1])


def cmd_cuts(args) -> int:
    ifn = read_ifn(args.ifn)
    levels = [_parse_level_pair(t) for t in (args.level or ["1,1"])]
    rows = []
    for alpha, beta in levels:
        rect = strong_cut(ifn, alpha, beta) if args.strong else cut(ifn, alpha, beta)
        rows.append(
            {
                "alpha": exact_str(rect.alpha),
                "beta": exact_str(rect.beta),
                "mu": [exact_str(rect.mu_lo), exact_str(rect.mu_hi)],
                "nu": [exact_str(rect.nu_lo), exact_str(rect.nu_hi)],
                "open": rect.mu_open,
            }
        )
    _emit(rows, args.format)
    return 0


def cmd_decide(args) -> int:
    seq = from_spec(args.seq)
    system = load_system(args.system, normalize=args.normalize)
    report = run_algorithm(system, seq=seq, depth=args.depth)
    doc = report.to_jsonable(places=args.prec, include_audit=args.audit)
    if args.errata:
        computed = golden.reference_errata(report, system)
        doc["errata"] = {
            "computed": [
                {"location": e.location, "recorded": e.recorded, "computed": e.computed, "note": e.note}
                for e in computed
            ],
            "registered": [
                {"location": e.location, "recorded": e.recorded, "computed": e.computed, "note": e.note}
                for e in golden.registry()
            ],
        }
    if args.plot:
        from .plotting import save_degrees_plot

        save_degrees_plot(report, args.plot)
    if args.format == "csv":
        _decide_csv(report, args.prec)
    else:
        _emit(doc, args.format)
    return 0


def _decide_csv(report, places: int) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["wr"] + list(report.alternatives))
    for x, row in zip(report.alternatives, report.matrix):
        writer.writerow([x] + [format_rational(v, places) for v in row])
    writer.writerow([])
    writer.writerow(["alternative", "degree"])
    for x, d in zip(report.alternatives, report.degrees):
        writer.writerow([x, format_rational(d, places)])


def cmd_emit_curve(args) -> int:
    ifn = read_ifn(args.ifn)
    rows = sample_curve(ifn, args.step)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for fn, name in ((ifn.mu, "mu"), (ifn.nu, "nu")):
        if fn.is_point:
            buf.write(f"# {name} support degenerate: single-point spike at {exact_str(fn.q1)}\n")
    writer.writerow(["x", "mu", "nu"])
    for x, m, n in rows:
        writer.writerow([exact_str(x), exact_str(m), exact_str(n)])
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.plot:
        from .plotting import save_curve_plot

        save_curve_plot(ifn, args.plot, step=args.step)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifnorder",
        description="Total ordering and dominance-based decisions over "
        "trapezoidal intuitionistic fuzzy numbers, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seq", default="distinct",
                       help="level sequence: distinct | repeats | file:<path>")
        p.add_argument("--depth", type=int, default=DEFAULT_DEPTH,
                       help="maximum level pairs to scan without a certificate")
        p.add_argument("--prec", type=int, default=6,
                       help="output decimal places (round half to even)")
        p.add_argument("--format", choices=["json", "table"], default="json")

    p = sub.add_parser("compare", help="compare two IFNs")
    p.add_argument("a")
    p.add_argument("b")
    common(p)
    p.set_defaults(handler=cmd_compare)

    p = sub.add_parser("sort", help="sort a JSON array of IFNs ascending")
    p.add_argument("items")
    common(p)
    p.set_defaults(handler=cmd_sort)

    p = sub.add_parser("scores", help="print score tables for IFN literals")
    p.add_argument("ifns", nargs="+")
    p.add_argument("--method", default="none",
                   help="legacy methods: all | none | comma list of names")
    common(p)
    p.set_defaults(handler=cmd_scores)

    p = sub.add_parser("cuts", help="print cut rectangles at requested levels")
    p.add_argument("ifn")
    p.add_argument("--level", action="append",
                   help="alpha,beta pair; repeatable (default 1,1)")
    p.add_argument("--strong", action="store_true", help="strong (open) cuts")
    common(p)
    p.set_defaults(handler=cmd_cuts)

    p = sub.add_parser("decide", help="run the dominance ranking pipeline")
    p.add_argument("system", help="system document (.json or .csv)")
    p.add_argument("--normalize", action="store_true",
                   help="rescale weights to sum to 1 instead of failing")
    p.add_argument("--audit", action="store_true",
                   help="include the per-pair comparison trail")
    p.add_argument("--errata", action="store_true",
                   help="compare against the bundled reference tables")
    p.add_argument("--plot", help="also write a dominance-degree bar chart (PNG)")
    p.add_argument("--seq", default="distinct")
    p.add_argument("--depth", type=int, default=DEFAULT_DEPTH)
    p.add_argument("--prec", type=int, default=6)
    p.add_argument("--format", choices=["json", "table", "csv"], default="json")
    p.set_defaults(handler=cmd_decide)

    p = sub.add_parser("emit-curve", help="emit (x, mu, nu) polylines as CSV")
    p.add_argument("ifn")
    p.add_argument("--step", help="uniform grid step in (0,1], e.g. 0.25 or 1/4")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--plot", help="also render the polylines to an image file")
    p.set_defaults(handler=cmd_emit_curve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except VALIDATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except Exception as exc:  # pragma: no cover - internal faults
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
