"""``cube`` command line.

Exit status: 0 success, 2 configuration error, 3 data validation error,
4 space budget exceeded.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import cubes, io, oracle
from .borders import compute_borders, is_member, solution_set
from .constraints import Aggregate, parse_conjunction, parse_number
from .errors import ConfigurationError, CubeError
from .lattice import DEFAULT_BUDGET, Space, canonical
from .transversals import (
    ctr,
    ctr_constrained,
    emerging_borders_via_transversals,
    maximal_frequent,
)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--measure", help="measure column (default: last column)")
    p.add_argument("--agg", default="sum", help="aggregate: sum or count (default sum)")
    p.add_argument("--delimiter", default=",", help="field delimiter of the input files")
    p.add_argument("--format", choices=io.FORMATS, default="json",
                   help="json document, aligned table, or csv")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="maximum number of cells in the space")


def _pair(p):
    p.add_argument("r1", help="reference relation (r1)")
    p.add_argument("r2", help="refreshed / compared relation (r2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cube", description="Border representations of constrained datacubes.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("borders", help="borders of the convex cube for --where")
    p.add_argument("inputs", nargs="+", metavar="FILE", help="one or two relations")
    p.add_argument("--where", required=True, help='e.g. "sum >= 3 AND sum <= 6"')
    _common(p)

    p = sub.add_parser("member", help="is a tuple in the convex cube? (yes/no)")
    p.add_argument("inputs", nargs="*", metavar="FILE")
    p.add_argument("--tuple", required=True, help='e.g. "ALL,Marseille,ALL"')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--where", help="constraint to evaluate via computed borders")
    group.add_argument("--border", help="answer from a saved border document alone")
    _common(p)

    p = sub.add_parser("datacube", help="all cube cells with their aggregate")
    p.add_argument("input")
    p.add_argument("--borders", action="store_true", help="emit the border form instead")
    _common(p)

    p = sub.add_parser("iceberg", help="borders of agg >= MIN")
    p.add_argument("input")
    p.add_argument("--min", required=True)
    p.add_argument("--relative", action="store_true", help="threshold is a share of the total")
    _common(p)

    p = sub.add_parser("range", help="borders of MIN <= agg <= MAX")
    p.add_argument("input")
    p.add_argument("--min", required=True)
    p.add_argument("--max", required=True)
    p.add_argument("--relative", action="store_true")
    _common(p)

    p = sub.add_parser("diff", help="differential cube: frequent in r2, absent from r1's cube")
    _pair(p)
    p.add_argument("--min", required=True)
    p.add_argument("--relative", action="store_true", help="threshold is a share of r2's total")
    _common(p)

    p = sub.add_parser("emerge", help="emerging cube from r1 to r2")
    _pair(p)
    p.add_argument("--s1", required=True, help="minShare1: tuples must stay below it in r1")
    p.add_argument("--s2", required=True, help="minShare2: tuples must reach it in r2")
    p.add_argument("--method", choices=("direct", "via-transversals"), default="direct")
    p.add_argument("--report", action="store_true", help="emit emergence rates instead of borders")
    _common(p)

    p = sub.add_parser("maximal", help="maximal frequent tuples (relative threshold)")
    p.add_argument("input")
    p.add_argument("--min", required=True)
    _common(p)

    p = sub.add_parser("transversals", help="M1, M2 and the cube transversals between them")
    _pair(p)
    p.add_argument("--s1", required=True)
    p.add_argument("--s2", required=True)
    _common(p)

    p = sub.add_parser("report", help="emergence report: delimited tables plus figures")
    _pair(p)
    p.add_argument("--s1", required=True)
    p.add_argument("--s2", required=True)
    p.add_argument("--out-dir", required=True)
    _common(p)

    # reproduces oracle-derived values; not advertised
    p = sub.add_parser("oracle")
    p.add_argument("inputs", nargs="+", metavar="FILE")
    p.add_argument("--where", required=True)
    _common(p)
    sub._choices_actions = [a for a in sub._choices_actions if a.dest != "oracle"]
    return parser


def _load(paths, args):
    if len(paths) > 2:
        raise ConfigurationError("at most two relations are supported")
    rels = [io.load_relation(p, args.measure, args.delimiter) for p in paths]
    if len(rels) == 2 and rels[0].dimensions != rels[1].dimensions:
        raise ConfigurationError(
            f"schemas differ: {rels[0].dimensions} vs {rels[1].dimensions}")
    return rels


def _where(text, rels):
    conj = parse_conjunction(text)
    if conj.arity > len(rels):
        raise ConfigurationError(f"constraint {conj} reads {conj.arity} relations, "
                                 f"{len(rels)} given")
    return conj


def _render_border(border, dims, constraint, fmt) -> str:
    if fmt == "table":
        return io.border_table(border, dims)
    if fmt == "csv":
        return io.border_csv(border, dims)
    return io.dumps(io.border_doc(border, dims, constraint))


def _render_rows(doc, header, rows, fmt) -> str:
    if fmt == "table":
        return io.aligned(header, rows)
    if fmt == "csv":
        return io.rows_csv(header, rows)
    return io.dumps(doc)


def _emit(text: str, args) -> None:
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _cmd_borders(args):
    rels = _load(args.inputs, args)
    conj = _where(args.where, rels)
    border = compute_borders(rels, conj, args.budget)
    return _render_border(border, rels[0].dimensions, conj, args.format)


def _cmd_member(args):
    if args.border:
        border, dims = io.load_border(args.border)
        if dims is None:
            raise ConfigurationError(f"{args.border} has no 'dimensions' field")
        arity = len(dims)
    else:
        if not args.inputs:
            raise ConfigurationError("member --where needs the relation file(s)")
        rels = _load(args.inputs, args)
        border = compute_borders(rels, _where(args.where, rels), args.budget)
        arity = rels[0].arity
    t = io.parse_tuple(args.tuple, arity)
    return "yes\n" if is_member(t, border) else "no\n"


def _cmd_datacube(args):
    (r,) = _load([args.input], args)
    if args.borders:
        border = cubes.datacube_borders(r, args.budget)
        return _render_border(border, r.dimensions, cubes.datacube_constraint(), args.format)
    cells = cubes.datacube(r, args.agg, args.budget)
    header = list(r.dimensions) + [f"{args.agg}"]
    return _render_rows(io.cells_doc(cells), header, io.cells_rows(cells, r.arity), args.format)


def _cmd_iceberg(args):
    (r,) = _load([args.input], args)
    conj = cubes.iceberg_constraint(args.agg, parse_number(args.min), args.relative)
    return _render_border(compute_borders(r, conj, args.budget), r.dimensions, conj, args.format)


def _cmd_range(args):
    (r,) = _load([args.input], args)
    conj = cubes.range_constraint(args.agg, parse_number(args.min), parse_number(args.max),
                                  args.relative)
    return _render_border(compute_borders(r, conj, args.budget), r.dimensions, conj, args.format)


def _cmd_diff(args):
    r1, r2 = _load([args.r1, args.r2], args)
    conj = cubes.differential_constraint(args.agg, parse_number(args.min), args.relative)
    border = compute_borders((r1, r2), conj, args.budget)
    return _render_border(border, r1.dimensions, conj, args.format)


def _shares(args):
    return parse_number(args.s1), parse_number(args.s2)


def _cmd_emerge(args):
    r1, r2 = _load([args.r1, args.r2], args)
    s1, s2 = _shares(args)
    conj = cubes.emerging_constraint(args.agg, s1, s2)
    if args.report:
        entries = cubes.emergence_report(r2, r1, args.agg, s1, s2, args.budget)
        header = list(r1.dimensions) + ["rate"]
        return _render_rows(io.report_doc(entries), header, io.report_rows(entries, r1.arity),
                            args.format)
    if args.method == "direct":
        border = cubes.emerging_borders(r2, r1, args.agg, s1, s2, args.budget)
    else:
        border = emerging_borders_via_transversals(r2, r1, args.agg, s1, s2, args.budget)
    return _render_border(border, r1.dimensions, conj, args.format)


def _antichain_rows(name, tuples, arity):
    return [[name] + io.tuple_cells(t, arity) for t in tuples]


def _cmd_maximal(args):
    (r,) = _load([args.input], args)
    m = maximal_frequent(r, args.agg, parse_number(args.min), args.budget)
    doc = {"dimensions": list(r.dimensions), "threshold": str(m.threshold),
           "function": m.function.value, "M": [io.tuple_doc(t) for t in m]}
    header = ["set"] + list(r.dimensions)
    return _render_rows(doc, header, _antichain_rows("M", m, r.arity), args.format)


def _cmd_transversals(args):
    r1, r2 = _load([args.r1, args.r2], args)
    s1, s2 = _shares(args)
    m1 = maximal_frequent(r1, args.agg, s1, args.budget)
    m2 = maximal_frequent(r2, args.agg, s2, args.budget)
    space = Space.of(r1, r2, budget=args.budget)
    plain = ctr(m1.tuples, space)
    constrained = ctr_constrained(m1.tuples, m2.tuples, space)
    sets = (("M1", m1.tuples), ("M2", m2.tuples), ("cTr(M1)", plain),
            ("cTr(M1,M2)", constrained))
    doc = {"dimensions": list(r1.dimensions)}
    doc.update({name: [io.tuple_doc(t) for t in ts] for name, ts in sets})
    rows = [row for name, ts in sets for row in _antichain_rows(name, ts, r1.arity)]
    return _render_rows(doc, ["set"] + list(r1.dimensions), rows, args.format)


def _cmd_report(args):
    from .plotting import plot_emergence_rates, plot_level_profile

    r1, r2 = _load([args.r1, args.r2], args)
    s1, s2 = _shares(args)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    conj = cubes.emerging_constraint(args.agg, s1, s2)
    space = Space.of(r1, r2, budget=args.budget)
    border = compute_borders(space, conj)
    entries = cubes.emergence_report(r2, r1, args.agg, s1, s2, args.budget)
    ratio = cubes.min_ratio(s1, s2)
    dims = list(r1.dimensions)

    files = {
        "emergence.csv": io.rows_csv(dims + ["rate"], io.report_rows(entries, r1.arity)),
        "borders.csv": io.border_csv(border, dims),
        "borders.json": io.dumps(io.border_doc(border, dims, conj)),
    }
    for name, text in files.items():
        (out / name).write_text(text, encoding="utf-8")
    plot_emergence_rates(entries, ratio, out / "emergence_rates.png")
    plot_level_profile(space, solution_set(space, conj), border, out / "level_profile.png")
    summary = [
        ["constraint", str(conj)],
        ["min_ratio", str(ratio)],
        ["emerging_tuples", str(len(entries))],
        ["G", str(len(border.G))],
        ["S", str(len(border.S))],
    ]
    return io.aligned(["item", "value"], summary) + "".join(
        f"wrote {out / name}\n" for name in
        list(files) + ["emergence_rates.png", "level_profile.png"])


def _cmd_oracle(args):
    rels = _load(args.inputs, args)
    conj = _where(args.where, rels)
    sol = oracle.brute_force_solutions(rels, conj, args.budget)
    border = oracle.extract_borders(sol)
    if args.format != "json":
        return _render_border(border, rels[0].dimensions, conj, args.format)
    doc = io.border_doc(border, rels[0].dimensions, conj)
    doc["solutions"] = [io.tuple_doc(t) for t in canonical(sol.tuples)]
    return io.dumps(doc)


COMMANDS = {
    "borders": _cmd_borders,
    "member": _cmd_member,
    "datacube": _cmd_datacube,
    "iceberg": _cmd_iceberg,
    "range": _cmd_range,
    "diff": _cmd_diff,
    "emerge": _cmd_emerge,
    "maximal": _cmd_maximal,
    "transversals": _cmd_transversals,
    "report": _cmd_report,
    "oracle": _cmd_oracle,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        Aggregate.coerce(args.agg)
        _emit(COMMANDS[args.command](args), args)
    except CubeError as exc:
        print(f"cube: error: {exc}", file=sys.stderr)
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
