"""Command-line front end: code generation, weight tables, sampling,
sweeps, threshold fits, and single-shot decoding.

Exit codes: 0 success, 1 runtime/decode failure, 2 usage error.  All
commands are deterministic given their flags (seeds included); wall-time
columns are the only non-reproducible output fields.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from . import codes, experiment, noise
from .decoder import (
    MwpmDecoder,
    PmwpmDecoder,
    build_weight_table,
    syndrome_consistent,
    weight_table_rows,
)
from .errors import DecodeError, DimensionError, FitError, ParameterError, StructureError
from .noise import NoiseParams, Syndrome

RESULT_COLUMNS = [
    "kind",
    "decoder",
    "d",
    "p",
    "eta_or_custom",
    "px",
    "py",
    "pz",
    "trials",
    "fail_x",
    "fail_z",
    "fail_any",
    "rate_any",
    "se_any",
    "seed",
    "elapsed_ms",
]


def _outpath(path: str) -> str:
    base = os.environ.get("XYZPLANAR_OUTDIR", "")
    if base and not os.path.isabs(path):
        os.makedirs(base, exist_ok=True)
        return os.path.join(base, path)
    return path


def parse_kind(value: str) -> str:
    aliases = {
        "planar": codes.PLANAR,
        "xyz": codes.XYZ_PLANAR,
        "xyz-planar": codes.XYZ_PLANAR,
    }
    try:
        return aliases[value]
    except KeyError:
        raise ParameterError(f"unknown code kind {value!r}") from None


def parse_eta(value: str) -> float:
    if value.lower() in ("inf", "infinity"):
        return math.inf
    try:
        return float(value)
    except ValueError:
        raise ParameterError(f"eta must be a positive number or 'inf', got {value!r}") from None


def parse_p_list(value: str) -> list[float]:
    """Accepts "0.1", "0.1,0.12,0.14", or "a:b:k" (k points, inclusive)."""
    try:
        if ":" in value:
            parts = value.split(":")
            if len(parts) != 3:
                raise ParameterError(f"range syntax is a:b:k, got {value!r}")
            a, b, k = float(parts[0]), float(parts[1]), int(parts[2])
            if k < 1:
                raise ParameterError("range needs at least one point")
            ps = [a] if k == 1 else np.linspace(a, b, k).tolist()
        elif "," in value:
            ps = [float(x) for x in value.split(",") if x]
        else:
            ps = [float(value)]
    except ValueError:
        raise ParameterError(f"could not parse p values from {value!r}") from None
    for p in ps:
        if not 0.0 <= p <= 1.0:
            raise ParameterError(f"p = {p} out of [0, 1]")
    return ps


def parse_distances(value: str) -> list[int]:
    try:
        return [int(x) for x in value.split(",") if x]
    except ValueError:
        raise ParameterError(f"could not parse distances from {value!r}") from None


def _add_noise_flags(sub: argparse.ArgumentParser, with_p: bool = True) -> None:
    if with_p:
        sub.add_argument("--p", help="error rate, list, or a:b:k range")
    sub.add_argument("--eta", help="bias eta (positive float or 'inf')")
    sub.add_argument("--px", type=float)
    sub.add_argument("--py", type=float)
    sub.add_argument("--pz", type=float)


def _resolve_noise(args, p: float | None = None) -> NoiseParams:
    custom = [args.px, args.py, args.pz]
    if args.eta is not None and any(v is not None for v in custom):
        raise ParameterError("--eta and --px/--py/--pz are mutually exclusive")
    if any(v is not None for v in custom):
        if not all(v is not None for v in custom):
            raise ParameterError("--px, --py and --pz must be given together")
        return noise.custom_params(args.px, args.py, args.pz)
    if args.eta is None:
        raise ParameterError("specify --eta (with --p) or the --px/--py/--pz triple")
    if p is None:
        raise ParameterError("--p is required with --eta")
    return noise.resolve_params(p, parse_eta(args.eta))


def _noise_grid(args) -> list[NoiseParams]:
    custom = [args.px, args.py, args.pz]
    if any(v is not None for v in custom):
        if getattr(args, "p", None):
            raise ParameterError("--p cannot be combined with --px/--py/--pz")
        return [_resolve_noise(args)]
    if not getattr(args, "p", None):
        raise ParameterError("--p is required with --eta")
    return [_resolve_noise(args, p) for p in parse_p_list(args.p)]


def _result_row(stats: experiment.BatchStats) -> dict:
    cfg = stats.config
    params = cfg.params
    eta = params.eta if params.eta != noise.ETA_CUSTOM else "custom"
    return {
        "kind": cfg.kind,
        "decoder": cfg.decoder,
        "d": cfg.d,
        "p": repr(params.p),
        "eta_or_custom": eta,
        "px": repr(params.p_x),
        "py": repr(params.p_y),
        "pz": repr(params.p_z),
        "trials": stats.trials,
        "fail_x": stats.failures_x,
        "fail_z": stats.failures_z,
        "fail_any": stats.failures_any,
        "rate_any": repr(stats.rate_any),
        "se_any": repr(stats.se_any),
        "seed": cfg.seed,
        "elapsed_ms": round(stats.elapsed_ms, 3),
    }


def write_results_csv(path: str, results: list[experiment.BatchStats]) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=RESULT_COLUMNS)
        writer.writeheader()
        for stats in results:
            writer.writerow(_result_row(stats))


def cmd_codegen(args) -> int:
    kind = parse_kind(args.kind)
    layout = codes.build_code(kind, args.distance)
    report = codes.validate_layout(layout)
    out = _outpath(args.out)
    codes.save_json(layout, out)
    print(f"wrote {out}: {kind} d={layout.d} n={layout.n} stabilizers={layout.n - 1}")
    print(str(report))
    return 0 if report.is_valid else 1


def cmd_weights(args) -> int:
    rows = []
    for params in _noise_grid(args):
        eta = params.eta if params.eta != noise.ETA_CUSTOM else "custom"
        for row in weight_table_rows(params):
            rows.append({"eta": eta, **row})
    out = _outpath(args.out)
    with open(out, "w", newline="") as fh:
        writer = csv.DictWriter(
            fh, fieldnames=["eta", "p", "k", "P_diff", "P_00", "P_11", "w_diff", "w_00", "w_11"]
        )
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (repr(v) if isinstance(v, float) else v) for k, v in row.items()})
    print(f"wrote {out} ({len(rows)} rows)")
    return 0


def cmd_sample(args) -> int:
    kind = parse_kind(args.kind)
    layout = codes.build_code(kind, args.distance)
    grid = _noise_grid(args)
    if len(grid) != 1:
        raise ParameterError("sample takes a single noise point")
    params = grid[0]
    records = []
    for t in range(args.trials):
        rng = noise.trial_rng(args.seed, 0, t)
        err = noise.sample_error(params, layout.n, rng)
        syn = noise.syndrome_of(layout, err)
        idx = np.nonzero(err.x_bits | err.z_bits)[0]
        records.append(
            {
                "trial": t,
                "error": {"qubits": idx.tolist(), "ops": "".join(err.to_label()[j] for j in idx)},
                "s_x": syn.s_x.tolist(),
                "s_zy": syn.s_zy.tolist(),
            }
        )
    doc = {
        "kind": kind,
        "d": layout.d,
        "n": layout.n,
        "seed": args.seed,
        "noise": {"px": params.p_x, "py": params.p_y, "pz": params.p_z},
        "trials": records,
    }
    out = _outpath(args.out)
    with open(out, "w") as fh:
        json.dump(doc, fh)
    print(f"wrote {out} ({args.trials} trials)")
    return 0


def cmd_decode(args) -> int:
    layout = codes.load_json(args.code)
    with open(args.syndrome) as fh:
        sdoc = json.load(fh)
    s_x = np.asarray(sdoc["s_x"], dtype=np.uint8)
    s_zy = np.asarray(sdoc["s_zy"], dtype=np.uint8)
    if s_x.shape != (layout.m_x,) or s_zy.shape != (layout.m_zy,):
        raise DimensionError(
            f"syndrome lengths ({s_x.size}, {s_zy.size}) do not match the code "
            f"({layout.m_x}, {layout.m_zy})"
        )
    syndrome = Syndrome(s_x, s_zy)
    grid = _noise_grid(args)
    if len(grid) != 1:
        raise ParameterError("decode takes a single noise point")
    params = grid[0]
    if args.decoder == experiment.PMWPM:
        dec = PmwpmDecoder(layout, build_weight_table(params))
    else:
        dec = MwpmDecoder(layout, params)
    e_z, e_x = dec.decode(syndrome)
    consistent = syndrome_consistent(layout, syndrome, e_z, e_x)
    out = _outpath(args.out)
    with open(out, "w") as fh:
        json.dump(
            {"e_z": e_z.tolist(), "e_x": e_x.tolist(), "consistent": bool(consistent)}, fh
        )
    print(f"verdict: {'consistent' if consistent else 'INCONSISTENT'}")
    return 0 if consistent else 1


def _common_experiment_args(args):
    kind = parse_kind(args.kind)
    distances = parse_distances(args.distances)
    for d in distances:
        if d < 3 or d % 2 == 0:
            raise ParameterError(f"distance must be odd >= 3, got {d}")
    grid = _noise_grid(args)
    if not distances or not grid:
        raise ParameterError("empty grid")
    batches = args.batches
    if args.trials % batches != 0:
        batches = math.gcd(args.trials, batches)
    return kind, distances, grid, batches


def cmd_sweep(args) -> int:
    kind, distances, grid, batches = _common_experiment_args(args)
    cells = experiment.grid_configs(
        kind, args.decoder, distances, grid, args.trials, args.seed, batches
    )
    results = experiment.sweep(cells, jobs=args.jobs)
    out = _outpath(args.out)
    write_results_csv(out, results)
    print(f"wrote {out} ({len(results)} cells)")
    return 0


def cmd_threshold(args) -> int:
    kind, distances, grid, batches = _common_experiment_args(args)
    if any(p.eta == noise.ETA_CUSTOM for p in grid):
        raise ParameterError("threshold fits need an --eta/--p grid, not a custom triple")
    cells = experiment.grid_configs(
        kind, args.decoder, distances, grid, args.trials, args.seed, batches
    )
    results = experiment.sweep(cells, jobs=args.jobs)
    out = _outpath(args.out)
    write_results_csv(out, results)
    points = []
    for stats in results:
        rate, se = stats.rate(args.failure)
        points.append((stats.config.d, stats.config.params.p, rate, max(se, 1e-6)))
    fit = experiment.fit_threshold(points)
    fit_out = _outpath(args.fit_out)
    with open(fit_out, "w") as fh:
        json.dump(fit.to_dict(), fh, indent=1)
    se_pc = fit.se.get("p_c", float("nan"))
    print(f"wrote {out} and {fit_out}")
    print(f"p_c = {fit.p_c:.4g} +/- {se_pc:.2g}  (nu = {fit.nu:.4g}, reliable={fit.reliable})")
    if not fit.reliable:
        print("fit flagged unreliable (no crossing in window or boundary optimum)")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xyzplanar",
        description="Planar / XYZ planar code decoding experiments under biased noise",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("codegen", help="write a code description JSON")
    p_gen.add_argument("--kind", required=True)
    p_gen.add_argument("--distance", type=int, required=True)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=cmd_codegen)

    p_w = sub.add_parser("weights", help="write the conditional-weight table CSV")
    _add_noise_flags(p_w)
    p_w.add_argument("--out", required=True)
    p_w.set_defaults(func=cmd_weights)

    p_s = sub.add_parser("sample", help="sample errors and syndromes to JSON")
    p_s.add_argument("--kind", required=True)
    p_s.add_argument("--distance", type=int, required=True)
    _add_noise_flags(p_s)
    p_s.add_argument("--trials", type=int, required=True)
    p_s.add_argument("--seed", type=int, required=True)
    p_s.add_argument("--out", required=True)
    p_s.set_defaults(func=cmd_sample)

    p_d = sub.add_parser("decode", help="decode one syndrome file")
    p_d.add_argument("--code", required=True)
    p_d.add_argument("--syndrome", required=True)
    p_d.add_argument("--decoder", choices=[experiment.MWPM, experiment.PMWPM], default=experiment.MWPM)
    _add_noise_flags(p_d)
    p_d.add_argument("--out", required=True)
    p_d.set_defaults(func=cmd_decode)

    for name, fn in (("sweep", cmd_sweep), ("threshold", cmd_threshold)):
        p_e = sub.add_parser(name, help=f"run a Monte Carlo {name}")
        p_e.add_argument("--kind", required=True)
        p_e.add_argument("--decoder", choices=[experiment.MWPM, experiment.PMWPM], required=True)
        p_e.add_argument("--distances", required=True, help="comma list, e.g. 11,15")
        _add_noise_flags(p_e)
        p_e.add_argument("--trials", type=int, required=True)
        p_e.add_argument("--seed", type=int, required=True)
        p_e.add_argument("--batches", type=int, default=100)
        p_e.add_argument("--jobs", type=int, default=1)
        p_e.add_argument("--out", required=True)
        if name == "threshold":
            p_e.add_argument("--fit-out", required=True)
            p_e.add_argument("--failure", choices=["any", "x", "z"], default="any")
        p_e.set_defaults(func=fn)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (
        ParameterError,
        StructureError,
        DimensionError,
        FileNotFoundError,
        json.JSONDecodeError,
        KeyError,
    ) as exc:
        print(f"error: {exc!r}" if isinstance(exc, KeyError) else f"error: {exc}", file=sys.stderr)
        return 2
    except (DecodeError, FitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
