"""Command-line interface.

Inputs are table names (``3_1``) or presentation files given with
``--file`` (text, or JSON with an ``arcs`` list). Reports go to stdout as
JSON; errors go to stderr as JSON with a nonzero exit code. Exit status is
0 only when every verification and bound check passes, 1 when a check
fails and 2 on errors.

Every flag may also be set through an environment variable named
``EQUISTICK_<FLAG>`` (for example ``EQUISTICK_SEED=7``); explicit flags win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .arcpres import ArcPresentation, from_json, parse_text, serialize_text
from .bounds import BoundsReport, lower_sanity, report_composite, report_single
from .compose import choose_splice_arcs, factor_jones, merge_presentations, realize_composite
from .diagram import arcpres_to_diagram, format_pd
from .errors import EquistickError
from .export import FORMATS, fmt_float, load_polygon_json, render, write_atomic
from .invariants import determinant, jones_polynomial
from .laurent import equal_up_to_mirror
from .projection import polygon_to_diagram
from .realize import RealizationParams, realize
from .table import KnotTableEntry, _census_key, entry_names, get_entry

ENV_PREFIX = "EQUISTICK_"
EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


@dataclass
class Source:
    name: str
    presentation: ArcPresentation
    entry: KnotTableEntry | None


def _read_presentation(path: str) -> ArcPresentation:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return from_json(text)
    return parse_text(text)


def _resolve(name: str | None, path: str | None) -> Source:
    if path is not None:
        return Source(Path(path).stem, _read_presentation(path), None)
    if name is None:
        raise ValueError("give a table name or --file")
    entry = get_entry(name)
    return Source(entry.name, entry.presentation, entry)


def _params(args) -> RealizationParams:
    kw = {"seed": args.seed}
    if args.spacing is not None:
        kw["spacing"] = args.spacing
    if args.epsilon is not None:
        kw["epsilon"] = args.epsilon
    if args.max_crossings is not None:
        kw["max_crossings"] = args.max_crossings
    return RealizationParams(**kw)


def _jones_kw(args):
    return {} if args.max_crossings is None else {"max_crossings": args.max_crossings}


def _emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _polygon_summary(poly) -> dict:
    return {
        "sticks": poly.n_edges,
        "clearance": float(poly.clearance),
        "max_length_deviation": float(poly.report().max_length_deviation),
    }


def _check_projection(poly, expected, det_expected, seed, kw):
    d = polygon_to_diagram(poly.vertices, seed=seed, clearance=poly.clearance)
    j = jones_polynomial(d, **kw)
    return equal_up_to_mirror(j, expected), (det_expected is None or determinant(d) == det_expected)


def _format_for(args) -> str:
    if args.format:
        return args.format
    if args.out:
        suffix = Path(args.out).suffix.lstrip(".").lower()
        if suffix in FORMATS:
            return suffix
    return "json"


def _bounds_for_file(source: Source, sticks: int, args, doubled: bool) -> BoundsReport | None:
    if args.crossing_number is None:
        return None
    c = args.crossing_number
    entry = KnotTableEntry(source.name, source.presentation, c, not args.nonalternating_prime,
                           args.nonalternating_prime, None, 0)
    return report_single(entry, sticks, doubled)


def cmd_validate(args) -> int:
    source = _resolve(args.name, args.file)
    p = source.presentation
    _emit({"name": source.name, "valid": True, "n": p.n, "arcs": [list(a) for a in p.arcs]})
    return EXIT_OK


def cmd_realize(args) -> int:
    source = _resolve(args.name, args.file)
    params = _params(args)
    p = source.presentation
    expected = source.entry.expected_jones if source.entry else jones_polynomial(arcpres_to_diagram(p), **_jones_kw(args))
    poly = realize(p, params, reduce=not args.no_reduce, expected_jones=expected)
    doubled = args.no_reduce or poly.n_edges == 2 * p.n
    jones_ok, det_ok = _check_projection(
        poly, expected, source.entry.determinant if source.entry else None, params.seed, _jones_kw(args)
    )
    bounds = report_single(source.entry, poly.n_edges, doubled) if source.entry else _bounds_for_file(source, poly.n_edges, args, doubled)
    passed = jones_ok and det_ok and (bounds is None or bounds.passed)
    if args.out and passed:
        write_atomic(args.out, render(poly, _format_for(args), params.seed))
    report = {"name": source.name, "n": p.n, **_polygon_summary(poly), "jones_match": jones_ok,
              "determinant_match": det_ok, "bounds": bounds.to_dict() if bounds else None,
              "passed": passed}
    if args.out:
        report["out"] = args.out if passed else None
    _emit(report)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_compose(args) -> int:
    s1 = _resolve(args.first, args.file1)
    s2 = _resolve(args.second, args.file2)
    params = _params(args)
    plan = choose_splice_arcs(s1.presentation, s2.presentation, args.arc1, args.arc2)
    merged, sides = merge_presentations(plan)
    if s1.entry and s2.entry:
        expected = s1.entry.expected_jones * s2.entry.expected_jones
    else:
        j1, j2 = factor_jones(plan, args.max_crossings)
        expected = j1 * j2
    poly = realize_composite(plan, params, reduce=not args.no_reduce, expected_jones=expected)
    det_expected = s1.entry.determinant * s2.entry.determinant if s1.entry and s2.entry else None
    jones_ok, det_ok = _check_projection(poly, expected, det_expected, params.seed, _jones_kw(args))
    bounds = report_composite(s1.entry, s2.entry, poly.n_edges, args.no_reduce) if s1.entry and s2.entry else None
    passed = jones_ok and det_ok and (bounds is None or bounds.passed)
    if passed and args.out:
        write_atomic(args.out, render(poly, _format_for(args), params.seed))
    if passed and args.merged_out:
        write_atomic(args.merged_out, serialize_text(merged))
    report = {"name": f"{s1.name}#{s2.name}", "factor_arcs": [plan.factor1.n, plan.factor2.n],
              "splice_pages": [plan.arc1, plan.arc2], "n": merged.n,
              "merged_presentation": serialize_text(merged), **_polygon_summary(poly),
              "jones_match": jones_ok, "determinant_match": det_ok,
              "bounds": bounds.to_dict() if bounds else None, "passed": passed}
    _emit(report)
    return EXIT_OK if passed else EXIT_FAIL


def cmd_invariant(args) -> int:
    kw = _jones_kw(args)
    if args.from_polygon:
        poly = load_polygon_json(args.from_polygon)
        d = polygon_to_diagram(poly.vertices, seed=args.seed)
        name = Path(args.from_polygon).stem
    else:
        source = _resolve(args.name, args.file)
        d = arcpres_to_diagram(source.presentation)
        name = source.name
    j = jones_polynomial(d, **kw)
    _emit({"name": name, "crossings": d.num_crossings, "jones": j.to_dict(),
           "jones_text": j.format("t"), "determinant": determinant(d)})
    return EXIT_OK


def cmd_export(args) -> int:
    fmt = _format_for(args)
    if args.from_polygon:
        poly = load_polygon_json(args.from_polygon)
        text = render(poly, fmt, args.seed)
    else:
        source = _resolve(args.name, args.file)
        if fmt == "pd":
            text = format_pd(arcpres_to_diagram(source.presentation)) + "\n"
        else:
            expected = source.entry.expected_jones if source.entry else None
            poly = realize(source.presentation, _params(args), reduce=not args.no_reduce, expected_jones=expected)
            text = render(poly, fmt, args.seed)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def batch_row(name: str, seed: int = 0, max_crossings: int | None = None) -> dict:
    """One summary row of the batch pipeline; errors become failed rows."""
    entry = get_entry(name)
    kw = {} if max_crossings is None else {"max_crossings": max_crossings}
    params = RealizationParams(seed=seed, **kw)
    row = {"name": name, "crossing_number": entry.crossing_number, "arc_index": entry.arc_index}
    try:
        poly = realize(entry.presentation, params, expected_jones=entry.expected_jones)
        doubled = realize(entry.presentation, params, reduce=False, expected_jones=entry.expected_jones)
        jones_ok, det_ok = _check_projection(poly, entry.expected_jones, entry.determinant, seed, kw)
        bounds = report_single(entry, poly.n_edges, doubled=poly.n_edges == 2 * entry.arc_index)
        row.update(
            sticks=poly.n_edges, doubled_sticks=doubled.n_edges,
            clearance=fmt_float(poly.clearance),
            max_length_deviation=fmt_float(poly.report().max_length_deviation),
            jones_match=jones_ok, determinant_match=det_ok,
            upper_bound=bounds.upper_bound, lower_sanity=bounds.lower_sanity,
            bound_pass=bounds.passed,
            passed=jones_ok and det_ok and bounds.passed and doubled.n_edges == 2 * entry.arc_index,
            error=None,
        )
    except EquistickError as exc:
        row.update(passed=False, error=f"{type(exc).__name__}: {exc}")
    return row


BATCH_COLUMNS = ["name", "crossing_number", "arc_index", "sticks", "doubled_sticks", "clearance",
                 "max_length_deviation", "jones_match", "determinant_match", "upper_bound",
                 "lower_sanity", "bound_pass", "passed", "error"]


def run_batch(names, seed=0, max_crossings=None, jobs=1) -> list[dict]:
    names = sorted(set(names), key=_census_key)
    if jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(batch_row, names, [seed] * len(names), [max_crossings] * len(names)))
    else:
        rows = [batch_row(n, seed, max_crossings) for n in names]
    return sorted(rows, key=lambda r: _census_key(r["name"]))


def format_batch(rows, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"rows": rows, "all_passed": all(r["passed"] for r in rows)},
                          indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, BATCH_COLUMNS, lineterminator="\r\n")
        writer.writeheader()
        for r in rows:
            writer.writerow({k: ("" if r.get(k) is None else r.get(k)) for k in BATCH_COLUMNS})
        return buf.getvalue()
    if fmt == "text":
        lines = [f"{'name':<8} {'c':>2} {'n':>2} {'sticks':>6} {'bound':>5}  result"]
        for r in rows:
            status = "pass" if r["passed"] else "FAIL " + (r.get("error") or "")
            lines.append(f"{r['name']:<8} {r['crossing_number']:>2} {r['arc_index']:>2} "
                         f"{r.get('sticks', '-'):>6} {r.get('upper_bound', '-'):>5}  {status}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown batch format {fmt!r}")


def cmd_batch(args) -> int:
    if args.names is None:
        names = entry_names()
    else:
        names = [n.strip() for n in args.names.split(",") if n.strip()]
        for n in names:
            get_entry(n)
    rows = run_batch(names, args.seed, args.max_crossings, args.jobs)
    text = format_batch(rows, args.format or "json")
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(r["passed"] for r in rows) else EXIT_FAIL


def cmd_table(args) -> int:
    rows = []
    for name in entry_names():
        e = get_entry(name)
        rows.append({"name": name, "crossing_number": e.crossing_number, "arc_index": e.arc_index,
                     "alternating": e.alternating, "prime": e.prime, "determinant": e.determinant,
                     "jones": e.expected_jones.format("t"),
                     "lower_sanity": lower_sanity(e.crossing_number)})
    if args.format == "json":
        _emit(rows)
    else:
        for r in rows:
            kind = "alternating" if r["alternating"] else "non-alternating"
            sys.stdout.write(f"{r['name']:<8} c={r['crossing_number']:<2} n={r['arc_index']:<2} "
                             f"det={r['determinant']:<3} {kind}  V(t) = {r['jones']}\n")
    return EXIT_OK


def _add_common(p, *, inputs=1, fmt_choices=FORMATS):
    if inputs == 1:
        p.add_argument("name", nargs="?", help="table entry, e.g. 3_1")
        p.add_argument("--file", help="presentation file (text or JSON)")
    p.add_argument("--seed", type=int)
    p.add_argument("--spacing", type=float)
    p.add_argument("--epsilon", type=float, help="axis approach distance")
    p.add_argument("--max-crossings", type=int)
    p.add_argument("--format", choices=fmt_choices)
    p.add_argument("--out", help="output path")
    p.add_argument("--no-reduce", action="store_true", help="emit the 2n-stick doubled form")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equistick", description="Equilateral stick knots from arc presentations.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an arc presentation")
    _add_common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("realize", help="build and verify an equilateral polygon")
    _add_common(p)
    p.add_argument("--crossing-number", type=int, help="crossing number for bound checks on --file input")
    p.add_argument("--nonalternating-prime", action="store_true")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("compose", help="realize a connected sum")
    p.add_argument("first", nargs="?")
    p.add_argument("second", nargs="?")
    p.add_argument("--file1")
    p.add_argument("--file2")
    p.add_argument("--arc1", type=int, help="page index of the splice arc in factor 1")
    p.add_argument("--arc2", type=int, help="page index of the splice arc in factor 2")
    p.add_argument("--merged-out", help="write the merged presentation here")
    _add_common(p, inputs=0)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("invariant", help="Jones polynomial and determinant")
    _add_common(p)
    p.add_argument("--from-polygon", help="polygon JSON written by realize")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("export", help="write a polygon or presentation in another format")
    _add_common(p)
    p.add_argument("--from-polygon", help="polygon JSON written by realize")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("batch", help="realize and verify many table entries")
    _add_common(p, inputs=0, fmt_choices=("json", "csv", "text"))
    p.add_argument("--names", help="comma-separated entries (default: whole table)")
    p.add_argument("--jobs", type=int)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("table", help="list the built-in table")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_table)
    return parser


_ENV_TYPES = {"seed": int, "spacing": float, "epsilon": float, "max_crossings": int,
              "format": str, "out": str, "jobs": int}


def _apply_env(args, environ):
    for dest, kind in _ENV_TYPES.items():
        if not hasattr(args, dest) or getattr(args, dest) is not None:
            continue
        raw = environ.get(ENV_PREFIX + dest.upper())
        if raw is not None:
            try:
                setattr(args, dest, kind(raw))
            except ValueError:
                raise ValueError(f"{ENV_PREFIX}{dest.upper()}={raw!r} is not a valid {kind.__name__}") from None
    if hasattr(args, "no_reduce") and not args.no_reduce:
        args.no_reduce = environ.get(ENV_PREFIX + "NO_REDUCE", "").lower() in ("1", "true", "yes")
    for dest, fallback in (("seed", 0), ("jobs", 1)):
        if hasattr(args, dest) and getattr(args, dest) is None:
            setattr(args, dest, fallback)


def main(argv=None, environ=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _apply_env(args, os.environ if environ is None else environ)
        return args.func(args)
    except (EquistickError, ValueError, KeyError, OSError) as exc:
        message = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        err = {"error": type(exc).__name__, "message": message}
        if getattr(exc, "line", None) is not None:
            err["line"] = exc.line
        sys.stderr.write(json.dumps(err, sort_keys=True) + "\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
