"""cca-figures: render one figure from a persisted dataset directory."""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .io import FigureInputError
from .render import FIGURES, FigureSpec, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cca-figures",
        description="Render fig2/fig3/fig4 analogs from cca-decay output files",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("figure", choices=FIGURES)
    parser.add_argument("--in", dest="input_dir", default="results",
                        help="dataset directory (default: results)")
    parser.add_argument("--out", dest="output", required=True,
                        help="output image (.png, .pdf or .svg)")
    parser.add_argument("--linear", action="store_true",
                        help="linear population axis for fig2 (default log-lin)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    spec = FigureSpec(args.figure, args.input_dir, args.output, log_pe=not args.linear)
    try:
        path = render(spec)
    except FigureInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
