"""Command-line figure rendering from experiment CSV/JSON outputs.

Exit codes: 0 success, 2 usage or schema error.
"""

from __future__ import annotations

import argparse
import sys

from .figures import plot_collapse, plot_vs_bias, plot_vs_distance
from .io import SchemaError, read_fit, read_results


def cmd_collapse(args) -> int:
    rows = read_results(args.results)
    fit = read_fit(args.fit)
    plot_collapse(rows, fit, args.out)
    print(f"wrote {args.out}")
    return 0


def cmd_vs_distance(args) -> int:
    rows = read_results(args.results)
    plot_vs_distance(rows, args.out, category=args.rate)
    print(f"wrote {args.out}")
    return 0


def cmd_vs_bias(args) -> int:
    planar = read_results(args.planar)
    xyz = read_results(args.xyz)
    plot_vs_bias(planar, xyz, args.out)
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xyzplanar-plots", description="Render figures from results CSV / fit JSON"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_c = sub.add_parser("collapse", help="finite-size-scaling collapse")
    p_c.add_argument("--results", required=True)
    p_c.add_argument("--fit", required=True)
    p_c.add_argument("--out", required=True)
    p_c.set_defaults(func=cmd_collapse)

    p_d = sub.add_parser("vs-distance", help="failure rate against code distance")
    p_d.add_argument("--results", required=True)
    p_d.add_argument("--rate", choices=["any", "x", "z"], default="x")
    p_d.add_argument("--out", required=True)
    p_d.set_defaults(func=cmd_vs_distance)

    p_b = sub.add_parser("vs-bias", help="two-decoder comparison against bias")
    p_b.add_argument("--planar", required=True)
    p_b.add_argument("--xyz", required=True)
    p_b.add_argument("--out", required=True)
    p_b.set_defaults(func=cmd_vs_bias)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SchemaError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
