"""The three figure renderers: scaling collapse, rate vs distance, and the
two-decoder bias comparison."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .io import ResultRow, ScalingFit, SchemaError

_MARKERS = "osD^v<>ph"


def _by_distance(rows: list[ResultRow]) -> dict[int, list[ResultRow]]:
    out: dict[int, list[ResultRow]] = {}
    for row in rows:
        out.setdefault(row.d, []).append(row)
    for pts in out.values():
        pts.sort(key=lambda r: r.p)
    return out


def plot_collapse(rows: list[ResultRow], fit: ScalingFit, out_path: str) -> None:
    """Failure rate against the rescaled variable, fitted quadratic overlaid,
    with an inset of the raw (p, f) curves."""
    groups = _by_distance(rows)
    fig, ax = plt.subplots(figsize=(6.4, 4.8))
    xs_all = []
    for i, (d, pts) in enumerate(sorted(groups.items())):
        x = np.array([fit.x(d, r.p) for r in pts])
        f = np.array([r.rate_any for r in pts])
        se = np.array([r.se_any for r in pts])
        xs_all.append(x)
        ax.errorbar(
            x, f, yerr=se, linestyle="none", marker=_MARKERS[i % len(_MARKERS)],
            markersize=4.5, capsize=2, label=f"d = {d}",
        )
    grid = np.linspace(min(x.min() for x in xs_all), max(x.max() for x in xs_all), 200)
    ax.plot(grid, fit.model(grid), "k-", linewidth=1, label="quadratic fit")
    ax.set_xlabel(r"$x = (p - p_c)\, d^{1/\nu}$")
    ax.set_ylabel("logical failure rate")
    ax.legend(fontsize=8)
    ax.set_title(rf"$p_c = {fit.p_c:.4f}$, $\nu = {fit.nu:.2f}$")

    inset = ax.inset_axes([0.08, 0.55, 0.34, 0.38])
    for i, (d, pts) in enumerate(sorted(groups.items())):
        inset.plot(
            [r.p for r in pts], [r.rate_any for r in pts],
            marker=_MARKERS[i % len(_MARKERS)], markersize=2.5, linewidth=0.8,
        )
    inset.axvline(fit.p_c, color="k", linewidth=0.6, linestyle=":")
    inset.set_xlabel("p", fontsize=7)
    inset.set_ylabel("f", fontsize=7)
    inset.tick_params(labelsize=6)

    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def plot_vs_distance(rows: list[ResultRow], out_path: str, category: str = "x") -> None:
    """Failure rate of one category against code distance, one curve per
    noise configuration."""
    configs: dict[tuple, list[ResultRow]] = {}
    for row in rows:
        configs.setdefault((row.px, row.py, row.pz), []).append(row)
    fig, ax = plt.subplots(figsize=(5.6, 4.2))
    for i, (trip, pts) in enumerate(sorted(configs.items())):
        pts.sort(key=lambda r: r.d)
        label = f"px={trip[0]:g}, py={trip[1]:g}, pz={trip[2]:g}"
        ax.plot(
            [r.d for r in pts], [r.rate(category) for r in pts],
            marker=_MARKERS[i % len(_MARKERS)], label=label,
        )
    ax.set_xlabel("code distance d")
    ax.set_ylabel(f"logical {category.upper()} failure rate")
    ax.set_yscale("log")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def plot_vs_bias(
    planar_rows: list[ResultRow], xyz_rows: list[ResultRow], out_path: str
) -> None:
    """Failure rate against bias: red for the planar/baseline runs, blue for
    the XYZ/posterior runs, one pair of curves per distance."""

    def grid_of(rows):
        return {(r.d, r.p, r.eta_or_custom) for r in rows}

    if grid_of(planar_rows) != grid_of(xyz_rows):
        raise SchemaError("the two results files do not share the same (d, p, eta) grid")

    def by_d(rows):
        out: dict[int, list[ResultRow]] = {}
        for r in rows:
            out.setdefault(r.d, []).append(r)
        for pts in out.values():
            pts.sort(key=lambda r: r.eta)
        return out

    fig, ax = plt.subplots(figsize=(6.0, 4.4))
    for i, (d, pts) in enumerate(sorted(by_d(planar_rows).items())):
        ax.plot(
            [r.eta for r in pts], [r.rate_any for r in pts], color="tab:red",
            marker=_MARKERS[i % len(_MARKERS)], markersize=4, label=f"planar/baseline d={d}",
        )
    for i, (d, pts) in enumerate(sorted(by_d(xyz_rows).items())):
        ax.plot(
            [r.eta for r in pts], [r.rate_any for r in pts], color="tab:blue",
            marker=_MARKERS[i % len(_MARKERS)], markersize=4, label=f"xyz/posterior d={d}",
        )
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel(r"bias $\eta$")
    ax.set_ylabel("logical failure rate")
    ax.legend(fontsize=7)
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)


def collapse_residual(rows: list[ResultRow], fit: ScalingFit) -> float:
    """Largest |f - model(x)| over the data; zero for exact synthetic input."""
    worst = 0.0
    for row in rows:
        worst = max(worst, abs(row.rate_any - fit.model(fit.x(row.d, row.p))))
    return worst
