"""Command-line front end.

Inputs are positional: existing file paths are read, ``-`` reads standard
input, anything else is taken as inline text.  Multiple inputs are joined
with blank lines (so each keeps its own verse grouping) and processed as
one document.

Exit codes: 0 success, 1 usage error, 2 database load error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import meterdb, pipeline
from .matcher import DEFAULT_TOP_K
from .translit import Scheme


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="vrtta",
        description="Identify Sanskrit meters from text, with fuzzy "
        "matching and per-syllable correction hints.",
    )
    parser.add_argument(
        "inputs",
        nargs="*",
        help="file paths, inline text, or '-' for standard input",
    )
    parser.add_argument(
        "--mode", choices=("line", "verse"), default="verse",
        help="identify each line on its own, or minimize cost per verse",
    )
    parser.add_argument(
        "--scheme",
        choices=("auto",) + tuple(s.value for s in Scheme),
        default="auto",
        help="input transliteration scheme (default: detect)",
    )
    parser.add_argument(
        "--k", type=int, default=DEFAULT_TOP_K,
        help="number of fuzzy matches to keep (default 10)",
    )
    parser.add_argument(
        "--format", choices=("compact", "detailed"), default="compact",
        help="output format (default compact)",
    )
    parser.add_argument("--db", help="path to a meter definition file")
    parser.add_argument(
        "--stats", action="store_true", help="append corpus statistics"
    )
    parser.add_argument("--output", help="write output to a file")
    return parser


def _read_inputs(inputs: list[str]) -> str:
    if not inputs:
        return sys.stdin.read()
    chunks = []
    for item in inputs:
        if item == "-":
            chunks.append(sys.stdin.read())
        elif os.path.isfile(item):
            with open(item, encoding="utf-8") as handle:
                chunks.append(handle.read())
        else:
            chunks.append(item)
    return "\n\n".join(chunks)


def run(args: argparse.Namespace) -> int:
    if args.k < 1:
        print("vrtta: error: --k must be at least 1", file=sys.stderr)
        return 1
    try:
        db = meterdb.load_path(args.db)
    except FileNotFoundError:
        path = args.db or meterdb.default_db_path()
        print(f"vrtta: cannot read meter database: {path}", file=sys.stderr)
        return 2
    except (meterdb.ParseError, meterdb.DuplicateMeterName,
            meterdb.InvalidGanaFormula) as exc:
        print(f"vrtta: bad meter database: {exc}", file=sys.stderr)
        return 2

    text = _read_inputs(args.inputs)
    if not text.strip():
        print("vrtta: error: empty input", file=sys.stderr)
        return 1

    result = pipeline.identify_document(
        text, db, mode=args.mode, scheme=args.scheme, k=args.k
    )

    out = pipeline.export(result, args.format)
    if args.format == "compact" and args.stats:
        out += pipeline.stats_footer(result.stats)

    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(out)
    else:
        sys.stdout.write(out)

    for lr in result.line_results:
        for warn in lr.warnings:
            print(
                f"vrtta: warning: {warn.message} {warn.char!r} "
                f"in line {lr.line.text!r}",
                file=sys.stderr,
            )
        if lr.chosen is None:
            print(
                f"vrtta: warning: unidentified line {lr.line.text!r}",
                file=sys.stderr,
            )
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(args)


if __name__ == "__main__":
    sys.exit(main())
