"""Command-line entry point: `stx-vote-plot plot --csv ... --out-dir ...`."""

from __future__ import annotations

import argparse
import sys

from .render import FORMATS, PlotSpec, render
from .schema import SchemaError


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stx-vote-plot",
        description="Render PER/PDR figures from sweep CSV files.")
    sub = parser.add_subparsers(dest="command", required=True)
    plot = sub.add_parser("plot", help="render all figures for one CSV")
    plot.add_argument("--csv", required=True, help="sweep results CSV")
    plot.add_argument("--out-dir", required=True, help="directory for images")
    plot.add_argument("--format", choices=FORMATS, default="png",
                      help="image format (default: png)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        written = render(PlotSpec(args.csv, args.out_dir, args.format))
    except SchemaError as exc:
        print(f"error: invalid sweep CSV: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    for path in written:
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
