"""Command line interface for rim invariants.

Subcommands: period, ext, word, matrix, table, render.  Structured output
is canonical JSON (schema "1", fixed field order, integers only) so repeated
runs are byte-identical.  Exit codes: 0 ok, 2 usage or bad input, 3
verification mismatch, 4 I/O failure, 5 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from math import gcd

from .ext import (
    even_offset_remark_min,
    ext,
    ext1_dimension_table,
)
from .render import DEFAULT_CONFIG, render_svg
from .resolution import (
    NotTwoPeakError,
    ProjectiveModuleError,
    build_D,
    period_closed_form,
    period_iterative,
)
from .rims import Rim, peak_count
from .snf import TooLargeError, snf_oracle
from .trapezia import MismatchedParametersError, build_Dstar, build_word

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_IO = 4
EXIT_TOO_LARGE = 5

DEFAULT_TABLE_CAP = 12
DEGREE_CAP = 1000


@dataclass(frozen=True)
class QueryResult:
    """Inputs echo, computed payload and trace metadata for one query."""

    command: str
    inputs: dict
    payload: dict
    trace: dict

    def document(self) -> dict:
        return {"schema": "1", "command": self.command, **self.inputs, **self.payload, **self.trace}


def canonical_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, separators=(",", ": ")) + "\n"


def _parse_rim(n: int, k: int, text: str) -> Rim:
    values: list[int] = []
    for token in text.split(","):
        token = token.strip()
        try:
            values.append(int(token))
        except ValueError:
            raise ValueError(f"invalid rim element {token!r}") from None
    if len(values) != k:
        raise ValueError(f"rim needs exactly k={k} elements, got {len(values)}")
    if len(set(values)) != len(values):
        dup = next(v for v in values if values.count(v) > 1)
        raise ValueError(f"duplicate rim element {dup}")
    return Rim(n, frozenset(values))


def _emit(args: argparse.Namespace, result: QueryResult, human: str) -> None:
    if args.json:
        sys.stdout.write(canonical_json(result.document()))
    else:
        print(human)


def cmd_period(args: argparse.Namespace) -> int:
    rim = _parse_rim(args.n, args.k, args.rim)
    closed = period_closed_form(rim)
    verified = False
    if args.verify:
        iterative = period_iterative(rim)
        if iterative != closed:
            print(
                f"verification mismatch: closed form {closed}, iterative {iterative}",
                file=sys.stderr,
            )
            return EXIT_VERIFY
        verified = True
    bound = 2 * rim.n // gcd(rim.n, rim.k)
    result = QueryResult(
        "period",
        {"n": rim.n, "k": rim.k, "rim": list(rim.sorted())},
        {"projective": closed.projective, "period": closed.period, "bound": bound},
        {"path": "closed_form", "verified": verified},
    )
    if closed.projective:
        human = "projective: no positive period"
    else:
        human = f"period {closed.period} (bound {bound})"
    _emit(args, result, human + (" [verified]" if verified else ""))
    return EXIT_OK


def _decomposition_text(shape: str, exponents: tuple[int, ...], dimension: int) -> str:
    if dimension == 0:
        return "0"
    if shape == "even_cyclic":
        return f"F[t]/(t^{exponents[0]}) with cyclic action"
    return " + ".join(f"F[t]/(t^{h})" for h in exponents)


def cmd_ext(args: argparse.Namespace) -> int:
    rim_i = _parse_rim(args.n, args.k, args.rim_i)
    rim_j = _parse_rim(args.n, args.k, args.rim_j)
    result_ext = ext(rim_i, rim_j, args.degree, max_degree=DEGREE_CAP)
    context = result_ext.context
    if args.degree % 2:
        path = (
            "zero_shortcut"
            if context == rim_j or peak_count(context) == 1
            else "odd_invariant_factors"
        )
    else:
        path = "zero_shortcut" if peak_count(rim_i) == 1 else "even_min_offset"
    verified = False
    if args.verify:
        if path == "odd_invariant_factors" or (args.degree % 2 and peak_count(context) >= 2):
            oracle = snf_oracle(build_Dstar(context, rim_j))
            ok = oracle.exponents == result_ext.exponents
            detail = f"oracle factors {oracle.exponents}, fast route {result_ext.exponents}"
        elif path == "even_min_offset":
            remark = even_offset_remark_min(context, rim_j)
            ok = remark == result_ext.exponents[0]
            detail = f"row/column scan {remark}, table minimum {result_ext.exponents[0]}"
        else:
            ok = result_ext.dimension == 0
            detail = f"projective shortcut with dimension {result_ext.dimension}"
        if not ok:
            print(f"verification mismatch: {detail}", file=sys.stderr)
            return EXIT_VERIFY
        verified = True
    result = QueryResult(
        "ext",
        {
            "n": rim_i.n,
            "k": rim_i.k,
            "rim_i": list(rim_i.sorted()),
            "rim_j": list(rim_j.sorted()),
            "degree": args.degree,
        },
        {
            "shape": result_ext.shape,
            "exponents": list(result_ext.exponents),
            "dimension": result_ext.dimension,
            "context_rim": list(context.sorted()),
        },
        {"path": path, "verified": verified},
    )
    human = (
        f"Ext^{args.degree} dimension {result_ext.dimension}: "
        + _decomposition_text(result_ext.shape, result_ext.exponents, result_ext.dimension)
    )
    _emit(args, result, human + (" [verified]" if verified else ""))
    return EXIT_OK


def cmd_word(args: argparse.Namespace) -> int:
    rim_i = _parse_rim(args.n, args.k, args.rim_i)
    rim_j = _parse_rim(args.n, args.k, args.rim_j)
    word = build_word(rim_i, rim_j)
    result = QueryResult(
        "word",
        {
            "n": rim_i.n,
            "k": rim_i.k,
            "rim_i": list(rim_i.sorted()),
            "rim_j": list(rim_j.sorted()),
        },
        {
            "raw": word.raw,
            "boxes": [list(box) for box in word.boxes],
            "s": word.s,
        },
        {"rotation_edge": word.rotation_edge},
    )
    boxes_text = "".join(f"({left},{right})" for left, right in word.boxes)
    human = f"word {word.raw or '(empty)'} boxes {boxes_text or '(none)'} s={word.s}"
    _emit(args, result, human)
    return EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> int:
    rim_i = _parse_rim(args.n, args.k, args.rim_i)
    if args.rim_j is None:
        matrix = build_D(rim_i)
        entry_rows = []
        p = len(matrix.cols)
        for i in range(p):
            keys = [(matrix.rows[i], matrix.cols[i])]
            if not matrix.degenerate:
                keys.append((matrix.rows[(i + 1) % p], matrix.cols[i]))
            for row, col in keys:
                arrow, sign, exponent = matrix.entries[(row, col)]
                entry_rows.append(
                    {"row": row, "col": col, "arrow": arrow, "sign": sign, "exponent": exponent}
                )
        result = QueryResult(
            "matrix",
            {"n": rim_i.n, "k": rim_i.k, "rim": list(rim_i.sorted())},
            {
                "kind": "cover_relations",
                "degenerate": matrix.degenerate,
                "rows": list(matrix.rows),
                "cols": list(matrix.cols),
                "entries": entry_rows,
            },
            {},
        )
        lines = [f"rows {list(matrix.rows)} cols {list(matrix.cols)}"]
        for e in entry_rows:
            sign = "-" if e["sign"] < 0 else "+"
            lines.append(f"({e['row']},{e['col']}) {sign}{e['arrow']}^{e['exponent']}")
        _emit(args, result, "\n".join(lines))
        return EXIT_OK
    rim_j = _parse_rim(args.n, args.k, args.rim_j)
    matrix = build_Dstar(rim_i, rim_j)
    entry_rows = []
    p = len(matrix.cols)
    for i in range(p):
        for row, col in (
            (matrix.rows[i], matrix.cols[i]),
            (matrix.rows[(i + 1) % p], matrix.cols[i]),
        ):
            sign, exponent = matrix.entries[(row, col)]
            entry_rows.append({"row": row, "col": col, "sign": sign, "exponent": exponent})
    result = QueryResult(
        "matrix",
        {
            "n": rim_i.n,
            "k": rim_i.k,
            "rim_i": list(rim_i.sorted()),
            "rim_j": list(rim_j.sorted()),
        },
        {
            "kind": "hom_image",
            "rows": list(matrix.rows),
            "cols": list(matrix.cols),
            "entries": entry_rows,
        },
        {},
    )
    lines = [f"rows {list(matrix.rows)} cols {list(matrix.cols)}"]
    for e in entry_rows:
        sign = "-" if e["sign"] < 0 else "+"
        lines.append(f"({e['row']},{e['col']}) {sign}t^{e['exponent']}")
    _emit(args, result, "\n".join(lines))
    return EXIT_OK


def _table_cap() -> int:
    raw = os.environ.get("GEXT_MAX_N")
    if raw is None:
        return DEFAULT_TABLE_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"GEXT_MAX_N must be an integer, got {raw!r}") from None


def cmd_table(args: argparse.Namespace) -> int:
    table = ext1_dimension_table(args.n, args.k, max_n=_table_cap())
    labels = [",".join(map(str, subset)) for subset in table.subsets]
    if args.json:
        doc = {
            "schema": "1",
            "command": "table",
            "n": table.n,
            "k": table.k,
            "subsets": [list(subset) for subset in table.subsets],
            "dimensions": [list(row) for row in table.dimensions],
        }
        sys.stdout.write(canonical_json(doc))
        return EXIT_OK
    if args.csv:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["rim"] + labels)
        for label, row in zip(labels, table.dimensions):
            writer.writerow([label] + list(row))
        sys.stdout.write(buffer.getvalue())
        return EXIT_OK
    width = max(len(label) for label in labels)
    print(" " * (width + 1) + " ".join(label.rjust(width) for label in labels))
    for label, row in zip(labels, table.dimensions):
        print(label.rjust(width) + "  " + " ".join(str(d).rjust(width) for d in row))
    return EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    rim_i = _parse_rim(args.n, args.k, args.rim_i)
    rim_j = _parse_rim(args.n, args.k, args.rim_j) if args.rim_j is not None else None
    svg = render_svg(rim_i, rim_j, DEFAULT_CONFIG)
    if args.out is None:
        sys.stdout.write(svg)
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8", newline="") as handle:
        handle.write(svg)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rimhom",
        description="Homological invariants of rim modules over circle algebras.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    period = sub.add_parser("period", help="minimal resolution period of one rim")
    period.add_argument("--n", type=int, required=True)
    period.add_argument("--k", type=int, required=True)
    period.add_argument("--rim", required=True, help="comma-separated rim elements")
    period.add_argument("--verify", action="store_true", help="cross-check by direct iteration")
    period.add_argument("--json", action="store_true")
    period.set_defaults(func=cmd_period)

    ext_cmd = sub.add_parser("ext", help="Ext space between two rims in one degree")
    ext_cmd.add_argument("--n", type=int, required=True)
    ext_cmd.add_argument("--k", type=int, required=True)
    ext_cmd.add_argument("--rim-i", required=True)
    ext_cmd.add_argument("--rim-j", required=True)
    ext_cmd.add_argument("--degree", type=int, default=1)
    ext_cmd.add_argument("--verify", action="store_true", help="cross-check with the slow oracle")
    ext_cmd.add_argument("--json", action="store_true")
    ext_cmd.set_defaults(func=cmd_ext)

    word = sub.add_parser("word", help="mismatch word and boxes for two rims")
    word.add_argument("--n", type=int, required=True)
    word.add_argument("--k", type=int, required=True)
    word.add_argument("--rim-i", required=True)
    word.add_argument("--rim-j", required=True)
    word.add_argument("--json", action="store_true")
    word.set_defaults(func=cmd_word)

    matrix = sub.add_parser("matrix", help="cover relations or hom-image matrix")
    matrix.add_argument("--n", type=int, required=True)
    matrix.add_argument("--k", type=int, required=True)
    matrix.add_argument("--rim-i", required=True)
    matrix.add_argument("--rim-j", help="second rim: dump the hom-image matrix instead")
    matrix.add_argument("--json", action="store_true")
    matrix.set_defaults(func=cmd_matrix)

    table = sub.add_parser("table", help="Ext^1 dimension table over all k-subsets")
    table.add_argument("--n", type=int, required=True)
    table.add_argument("--k", type=int, required=True)
    fmt = table.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    table.set_defaults(func=cmd_table)

    render = sub.add_parser("render", help="SVG picture of one or two rims")
    render.add_argument("--n", type=int, required=True)
    render.add_argument("--k", type=int, required=True)
    render.add_argument("--rim-i", required=True)
    render.add_argument("--rim-j")
    render.add_argument("--out", help="output path (stdout when omitted)")
    render.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (
        MismatchedParametersError,
        NotTwoPeakError,
        ProjectiveModuleError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
