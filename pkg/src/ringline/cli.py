"""Command-line interface.

Subcommands: parse, ring, ideals, line, profile, table.  Exit codes:
0 success, 1 computation failure or --check mismatch, 2 usage or
ring-expression error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import dsl
from .catalog import CATALOG, entries_for_orders
from .ideals import InternalError, all_ideals, is_local, residue_field_sizes
from .line import CrossCheckError, enumerate_points, to_dot, to_edge_csv
from .profile import HomogeneityError, LineProfile, group_profiles, profile
from .rings import BoundError, ValidationError, build, format_tables

_PROFILE_KEYS = ("tot", "tpI", "oneN", "cap2N", "cap3N", "jcb", "md")
_COMPUTE_ERRORS = (ValidationError, BoundError, CrossCheckError,
                   HomogeneityError, InternalError)


def _orders_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep or not lo.isdigit() or not hi.isdigit():
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    return int(lo), int(hi)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringline",
        description="Projective lines over small finite commutative rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, formats: tuple[str, ...]) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--format", choices=formats, default=formats[0])
        return p

    p = add("parse", "parse a ring expression and print its canonical form",
            ("text", "json"))
    p.add_argument("spec")

    p = add("ring", "build a ring and show its element structure", ("text", "json"))
    p.add_argument("spec")

    p = add("ideals", "ideal lattice, maximal ideals, radical, locality",
            ("text", "json"))
    p.add_argument("spec")

    p = add("line", "enumerate the projective line over a ring", ("text", "json"))
    p.add_argument("spec")
    p.add_argument("--export-graph", choices=("dot", "csv"))
    p.add_argument("--graph", choices=("neighbour", "distant"), default="neighbour")

    p = add("profile", "seven-number classification profile of a line",
            ("text", "json", "csv"))
    p.add_argument("spec")

    p = add("table", "run the built-in catalog of line types",
            ("text", "csv", "json", "markdown"))
    p.add_argument("--orders", type=_orders_range, metavar="A..B",
                   help="restrict to catalog rings with order in [A, B]")
    p.add_argument("--check", action="store_true",
                   help="diff computed profiles against expected; exit 1 on mismatch")
    p.add_argument("--jobs", type=int, default=1, metavar="N",
                   help="number of worker processes")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "table":
            return _cmd_table(args)
        return _command_for(args.command)(args)
    except (dsl.ParseError, dsl.SemanticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _COMPUTE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


def _command_for(name: str):
    return {"parse": _cmd_parse, "ring": _cmd_ring, "ideals": _cmd_ideals,
            "line": _cmd_line, "profile": _cmd_profile}[name]


# --- subcommands -----------------------------------------------------------


def _ast_dict(expr: dsl.RingExpr) -> dict:
    if isinstance(expr, dsl.Zn):
        return {"kind": "zn", "n": expr.n}
    if isinstance(expr, dsl.GF):
        return {"kind": "gf", "p": expr.p, "k": expr.k}
    if isinstance(expr, dsl.Quotient):
        return {"kind": "quotient", "base": _ast_dict(expr.base),
                "modulus": list(expr.modulus.coeffs)}
    return {"kind": "product", "factors": [_ast_dict(f) for f in expr.factors]}


def _cmd_parse(args) -> int:
    expr = dsl.parse(args.spec)
    if args.format == "json":
        print(json.dumps({"input": args.spec, "canonical": dsl.render(expr),
                          "ast": _ast_dict(expr)}, indent=2))
    else:
        print(dsl.render(expr))
    return 0


def _cmd_ring(args) -> int:
    ring = build(dsl.parse(args.spec))
    units = [ring.labels[e] for e in ring.units()]
    zds = [ring.labels[e] for e in ring.zero_divisors()]
    if args.format == "json":
        print(json.dumps({
            "expr": dsl.render(ring.expr),
            "order": ring.order,
            "characteristic": ring.characteristic,
            "one": ring.labels[ring.one],
            "units": units,
            "zeroDivisors": zds,
        }, indent=2))
    else:
        print(f"ring:           {dsl.render(ring.expr)}")
        print(f"order:          {ring.order}")
        print(f"characteristic: {ring.characteristic}")
        print(f"one:            {ring.labels[ring.one]}")
        print(f"units ({len(units)}):     {' '.join(units)}")
        print(f"zero-divisors ({len(zds)}): {' '.join(zds)}")
        print()
        print(format_tables(ring))
    return 0


def _cmd_ideals(args) -> int:
    ring = build(dsl.parse(args.spec))
    lattice = all_ideals(ring)
    local = is_local(ring, lattice)
    maximal = [lattice.labels(m) for m in lattice.maximal]
    radical = lattice.labels(lattice.radical)
    if args.format == "json":
        print(json.dumps({
            "expr": dsl.render(ring.expr),
            "idealCount": len(lattice.ideals),
            "idealSizes": [m.bit_count() for m in lattice.ideals],
            "maximal": maximal,
            "radical": radical,
            "residueFieldSizes": residue_field_sizes(lattice),
            "local": local,
        }, indent=2))
    else:
        print(f"ring:        {dsl.render(ring.expr)}")
        print(f"ideals:      {len(lattice.ideals)}")
        for i, members in enumerate(maximal, 1):
            print(f"maximal #{i}:  {{{', '.join(members)}}}")
        print(f"radical:     {{{', '.join(radical)}}}")
        print(f"local:       {'yes' if local else 'no'}")
    return 0


def _cmd_line(args) -> int:
    ring = build(dsl.parse(args.spec))
    line = enumerate_points(ring)
    if args.export_graph == "dot":
        sys.stdout.write(to_dot(line, args.graph))
        return 0
    if args.export_graph == "csv":
        sys.stdout.write(to_edge_csv(line, args.graph))
        return 0
    tpi = line.type_i_count()
    if args.format == "json":
        print(json.dumps({
            "expr": dsl.render(ring.expr),
            "tot": line.size,
            "tpI": tpi,
            "tpII": line.size - tpi,
            "points": [
                {"label": line.point_label(i), "typeI": line.points[i].type_i}
                for i in range(line.size)
            ],
        }, indent=2))
    else:
        print(f"line over:    {dsl.render(ring.expr)}")
        print(f"points:       {line.size} ({tpi} type I, {line.size - tpi} type II)")
        for i in range(line.size):
            kind = "I " if line.points[i].type_i else "II"
            print(f"  [{kind}] {line.point_label(i)}")
    return 0


def _profile_row(entry_expr: str) -> tuple[str, tuple[int, ...]]:
    """Worker: computed type label and seven profile numbers for one ring."""
    prof = profile(enumerate_points(build(dsl.parse(entry_expr))))
    return prof.type_label, prof.numbers


def _profile_dict(label: str, numbers: tuple[int, ...]) -> dict:
    return dict(zip(_PROFILE_KEYS, numbers)) | {"typeLabel": label}


def _cmd_profile(args) -> int:
    label, numbers = _profile_row(args.spec)
    expr = dsl.render(dsl.parse(args.spec))
    if args.format == "json":
        print(json.dumps({"typeLabel": label, "expr": expr,
                          "profile": dict(zip(_PROFILE_KEYS, numbers))}, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["typeLabel", *_PROFILE_KEYS, "expr"])
        writer.writerow([label, *numbers, expr])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"ring:  {expr}")
        print(f"type:  {label}")
        for key, value in zip(_PROFILE_KEYS, numbers):
            print(f"{key:>6}: {value}")
    return 0


# --- catalog table -----------------------------------------------------------


def _cmd_table(args) -> int:
    entries = CATALOG if args.orders is None else entries_for_orders(*args.orders)
    exprs = [e.expr for e in entries]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            computed = list(pool.map(_profile_row, exprs))
    else:
        computed = [_profile_row(x) for x in exprs]

    rows = []
    failures = 0
    for entry_, (label, numbers) in zip(entries, computed):
        ok = label == entry_.type_label and numbers == entry_.expected.numbers
        failures += 0 if ok else 1
        rows.append((entry_, label, numbers, ok))

    distinct = len(group_profiles(
        (e.expr, LineProfile(label, *numbers))
        for e, label, numbers, _ok in rows
    ))
    summary = f"{distinct} distinct profiles across {len(rows)} catalog entries"
    if args.check:
        summary += f"; {failures} mismatch(es)" if failures else "; all rows match"

    writer = {"csv": _table_csv, "json": _table_json,
              "markdown": _table_markdown, "text": _table_text}[args.format]
    writer(rows, args.check, summary)
    return 1 if (args.check and failures) else 0


def _table_csv(rows, check: bool, summary: str) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    header = ["typeLabel", *_PROFILE_KEYS, "expr"] + (["pass"] if check else [])
    writer.writerow(header)
    for entry_, label, numbers, ok in rows:
        row = [label, *numbers, entry_.expr] + ([str(ok).lower()] if check else [])
        writer.writerow(row)
    print(summary, file=sys.stderr)


def _table_json(rows, check: bool, summary: str) -> None:
    payload = []
    for entry_, label, numbers, ok in rows:
        item = {"typeLabel": label,
                "profile": dict(zip(_PROFILE_KEYS, numbers)),
                "expr": entry_.expr}
        if check:
            item["pass"] = ok
        payload.append(item)
    print(json.dumps(payload, indent=2))
    print(summary, file=sys.stderr)


def _table_markdown(rows, check: bool, summary: str) -> None:
    header = ["typeLabel", *_PROFILE_KEYS, "expr"] + (["pass"] if check else [])
    print("| " + " | ".join(header) + " |")
    print("|" + "---|" * len(header))
    for entry_, label, numbers, ok in rows:
        cells = [label, *map(str, numbers), entry_.expr]
        if check:
            cells.append("PASS" if ok else "FAIL")
        print("| " + " | ".join(cells) + " |")
    print()
    print(summary)


def _table_text(rows, check: bool, summary: str) -> None:
    header = ["typeLabel", *_PROFILE_KEYS]
    widths = [9, 4, 4, 4, 6, 6, 4, 3]
    head = "  ".join(h.ljust(w) for h, w in zip(header, widths))
    print(head + "  expr" + ("  result" if check else ""))
    for entry_, label, numbers, ok in rows:
        cells = [label.ljust(widths[0])]
        cells += [str(v).ljust(w) for v, w in zip(numbers, widths[1:])]
        tail = f"  {'PASS' if ok else 'FAIL'}" if check else ""
        print("  ".join(cells) + f"  {entry_.expr}{tail}")
    print()
    print(summary)


if __name__ == "__main__":
    entry()
