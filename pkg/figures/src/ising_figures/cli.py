"""figures <kind> --in <csv> --out <png/svg>"""

from __future__ import annotations

import argparse
import sys

from .io import SchemaError
from .render import KINDS, FigureSpec, render


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="figures",
        description="Render seeded-ising CSV outputs as figures; plots the file's numbers verbatim.",
    )
    parser.add_argument("kind", choices=KINDS)
    parser.add_argument("--in", dest="input_csv", required=True, help="input CSV path")
    parser.add_argument("--out", required=True, help="output image path (.png or .svg)")
    parser.add_argument("--probe-out", help="also dump the plotted series to this CSV")
    parser.add_argument("--title", help="figure title override")
    parser.add_argument("--zoom-center", type=float, default=0.395,
                        help="match-rate zoom window midpoint (default 0.395)")
    parser.add_argument("--zoom-halfwidth", type=float, default=0.02)
    args = parser.parse_args(argv)
    spec = FigureSpec(
        kind=args.kind,
        input_csv=args.input_csv,
        output=args.out,
        probe_out=args.probe_out,
        title=args.title,
        zoom_center=args.zoom_center,
        zoom_halfwidth=args.zoom_halfwidth,
    )
    try:
        render(spec)
    except (SchemaError, OSError) as exc:
        print(f"figures: error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {spec.output}" + (f" and {spec.probe_out}" if spec.probe_out else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main())
