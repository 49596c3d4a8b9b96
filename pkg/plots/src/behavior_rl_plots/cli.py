"""Command-line figure rendering: ``plot curves|pca --in ... --out ...``."""

import argparse
import sys

from .figures import DEFAULT_WINDOW, InputError, PlotSpec, plot_curves, plot_pca


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="plot",
        description="Render figures from training metrics CSV files.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser(
        "curves",
        help="learning curves with a shaded one-standard-deviation band")
    c.add_argument("--in", dest="inputs", nargs="+", required=True,
                   metavar="CSV", help="aggregate metrics CSV file(s)")
    c.add_argument("--out", required=True, help="output image path")
    c.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                   help=f"smoothing window in episodes (default {DEFAULT_WINDOW})")
    c.add_argument("--group-by", choices=("mode", "schedule"), default=None,
                   help="legend label column (default: auto)")
    c.set_defaults(render=plot_curves)

    s = sub.add_parser("pca", help="2-D node map colored by dominant task")
    s.add_argument("--in", dest="inputs", nargs=1, required=True,
                   metavar="CSV", help="node projection CSV file")
    s.add_argument("--out", required=True, help="output image path")
    s.set_defaults(render=plot_pca, window=DEFAULT_WINDOW, group_by=None)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        spec = PlotSpec(inputs=tuple(args.inputs), out=args.out,
                        window=args.window, group_by=args.group_by)
        args.render(spec)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
