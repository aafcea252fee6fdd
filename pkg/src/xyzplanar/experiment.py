"""Monte Carlo harness: trial execution, failure accounting, jackknife
error bars, grid sweeps, and the critical-exponent threshold fit.

Each trial draws its RNG stream from (master seed, cell index, trial
index), so results are reproducible and independent of execution order or
worker count.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .codes import CodeLayout, build_code
from .decoder import (
    MwpmDecoder,
    PmwpmDecoder,
    build_weight_table,
    correction_to_pauli,
    syndrome_consistent,
)
from .errors import FitError, ParameterError
from .noise import NoiseParams, sample_error, syndrome_of, trial_rng
from .pauli import PauliString, multiply, symplectic_product

MWPM = "mwpm"
PMWPM = "pmwpm"


def is_logical_failure(layout: CodeLayout, residual: PauliString) -> tuple[int, int]:
    """(fail_x, fail_z): does the residual act as a logical X and/or Z?

    The residual (true error times correction) must have zero syndrome;
    a nonzero one is a decoder contract violation and raises.
    """
    syn = syndrome_of(layout, residual)
    if syn.s_x.any() or syn.s_zy.any():
        raise AssertionError("residual has nonzero syndrome; decoder contract violated")
    fail_x = symplectic_product(residual, layout.logical_z)
    fail_z = symplectic_product(residual, layout.logical_x)
    return fail_x, fail_z


def jackknife(batch_rates) -> tuple[float, float]:
    """Leave-one-out jackknife mean and standard error over batch rates."""
    rates = np.asarray(batch_rates, dtype=np.float64)
    b = rates.size
    if b < 2:
        raise ParameterError(f"jackknife needs at least 2 batches, got {b}")
    total = rates.sum()
    loo = (total - rates) / (b - 1)
    mean = rates.mean()
    se = math.sqrt((b - 1) / b * float(((loo - loo.mean()) ** 2).sum()))
    return float(mean), se


@dataclass(frozen=True)
class TrialConfig:
    kind: str
    d: int
    params: NoiseParams
    decoder: str  # mwpm | pmwpm
    trials: int
    seed: int
    batches: int = 100
    cell_index: int = 0

    def __post_init__(self) -> None:
        if self.trials < 1:
            raise ParameterError("trials must be >= 1")
        if self.decoder not in (MWPM, PMWPM):
            raise ParameterError(f"unknown decoder {self.decoder!r}")
        if self.batches < 1 or self.trials % self.batches != 0:
            raise ParameterError(
                f"batch count {self.batches} must divide trials {self.trials}"
            )


@dataclass
class BatchStats:
    config: TrialConfig
    trials: int
    failures_x: int
    failures_z: int
    failures_any: int
    rate_x: float
    rate_z: float
    rate_any: float
    se_x: float
    se_z: float
    se_any: float
    elapsed_ms: float

    def rate(self, category: str) -> tuple[float, float]:
        return {
            "x": (self.rate_x, self.se_x),
            "z": (self.rate_z, self.se_z),
            "any": (self.rate_any, self.se_any),
        }[category]


def make_decoder(layout: CodeLayout, decoder: str, params: NoiseParams):
    if decoder == PMWPM:
        return PmwpmDecoder(layout, build_weight_table(params))
    return MwpmDecoder(layout, params)


def run_trials(config: TrialConfig, layout: CodeLayout | None = None) -> BatchStats:
    """Sample, decode and aggregate; deterministic given the config."""
    if layout is None:
        layout = build_code(config.kind, config.d)
    dec = make_decoder(layout, config.decoder, config.params)
    params = config.params
    n = layout.n
    batch_size = config.trials // config.batches
    fx_tot = fz_tot = fany_tot = 0
    bx = np.zeros(config.batches)
    bz = np.zeros(config.batches)
    bany = np.zeros(config.batches)
    t0 = time.perf_counter()
    for t in range(config.trials):
        rng = trial_rng(config.seed, config.cell_index, t)
        err = sample_error(params, n, rng)
        syn = syndrome_of(layout, err)
        e_z, e_x = dec.decode(syn)
        if not syndrome_consistent(layout, syn, e_z, e_x):
            raise AssertionError(
                f"correction does not reproduce syndrome (trial {t}, {config})"
            )
        residual = multiply(err, correction_to_pauli(e_z, e_x))
        fail_x = symplectic_product(residual, layout.logical_z)
        fail_z = symplectic_product(residual, layout.logical_x)
        b = t // batch_size
        fx_tot += fail_x
        fz_tot += fail_z
        fany_tot += 1 if (fail_x or fail_z) else 0
        bx[b] += fail_x
        bz[b] += fail_z
        bany[b] += 1 if (fail_x or fail_z) else 0
    elapsed = (time.perf_counter() - t0) * 1e3
    if config.batches >= 2:
        _, se_x = jackknife(bx / batch_size)
        _, se_z = jackknife(bz / batch_size)
        _, se_any = jackknife(bany / batch_size)
    else:
        se_x = se_z = se_any = float("nan")
    return BatchStats(
        config=config,
        trials=config.trials,
        failures_x=fx_tot,
        failures_z=fz_tot,
        failures_any=fany_tot,
        rate_x=fx_tot / config.trials,
        rate_z=fz_tot / config.trials,
        rate_any=fany_tot / config.trials,
        se_x=se_x,
        se_z=se_z,
        se_any=se_any,
        elapsed_ms=elapsed,
    )


def _run_cell(config: TrialConfig) -> BatchStats:
    return run_trials(config)


def sweep(cells: list[TrialConfig], jobs: int = 1, on_result=None) -> list[BatchStats]:
    """Run every cell; output order and content are independent of ``jobs``."""
    if jobs > 1 and len(cells) > 1:
        import multiprocessing as mp

        with mp.get_context("spawn").Pool(jobs) as pool:
            results = pool.map(_run_cell, cells)
    else:
        results = [run_trials(c) for c in cells]
    if on_result is not None:
        for r in results:
            on_result(r)
    return results


def grid_configs(
    kind: str,
    decoder: str,
    distances,
    params_list,
    trials: int,
    seed: int,
    batches: int = 100,
) -> list[TrialConfig]:
    """Cell list for a (d x params) grid, with stable cell indices."""
    cells = []
    idx = 0
    for d in distances:
        for params in params_list:
            cells.append(
                TrialConfig(
                    kind=kind,
                    d=d,
                    params=params,
                    decoder=decoder,
                    trials=trials,
                    seed=seed,
                    batches=batches,
                    cell_index=idx,
                )
            )
            idx += 1
    return cells


# ---------------------------------------------------------------------------
# Critical-exponent threshold fit: f = A + B x + C x^2, x = (p - p_c) d^(1/nu)


@dataclass
class FitResult:
    p_c: float
    nu: float
    A: float
    B: float
    C: float
    se: dict = field(default_factory=dict)
    residual: float = 0.0
    window: tuple[float, float] = (0.0, 0.0)
    points_used: int = 0
    reliable: bool = True

    def model(self, d, p):
        x = (np.asarray(p, dtype=float) - self.p_c) * np.asarray(d, dtype=float) ** (
            1.0 / self.nu
        )
        return self.A + self.B * x + self.C * x * x

    def to_dict(self) -> dict:
        return {
            "p_c": self.p_c,
            "nu": self.nu,
            "A": self.A,
            "B": self.B,
            "C": self.C,
            "se": self.se,
            "residual": self.residual,
            "window": list(self.window),
            "points_used": self.points_used,
            "reliable": self.reliable,
        }


def _fit_points(points) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    pts = np.asarray(points, dtype=np.float64)
    if pts.ndim != 2 or pts.shape[1] != 4:
        raise FitError("points must be rows of (d, p, f, sigma_f)")
    d, p, f, sig = pts.T
    if (sig <= 0).any():
        raise FitError("all sigma_f must be positive")
    if np.unique(d).size < 2:
        raise FitError("need at least 2 distinct code distances")
    for dv in np.unique(d):
        if np.unique(p[d == dv]).size < 3:
            raise FitError(f"need at least 3 p values per distance (d={dv:g})")
    return d, p, f, sig


def _quadratic_chi2(d, p, f, sig, p_c, nu):
    """Exact inner solve for (A, B, C) given (p_c, nu); returns (chi2, abc)."""
    x = (p - p_c) * d ** (1.0 / nu)
    design = np.stack([np.ones_like(x), x, x * x], axis=1) / sig[:, None]
    target = f / sig
    abc, _res, rank_, _sv = np.linalg.lstsq(design, target, rcond=None)
    if rank_ < 3:
        return float("inf"), abc
    resid = design @ abc - target
    return float(resid @ resid), abc


def fit_threshold(points, window: tuple[float, float] | None = None) -> FitResult:
    """Weighted fit of the scaling model over (p_c, nu, A, B, C).

    The two nonlinear parameters are found by a deterministic coarse grid
    (p_c step 1e-3 over the window, nu in [0.5, 3] step 0.05) followed by
    Nelder-Mead refinement; (A, B, C) are solved exactly by weighted linear
    least squares at every step.  Parameter uncertainties come from
    leave-one-out jackknife over the data points.
    """
    d, p, f, sig = _fit_points(points)
    if window is None:
        window = (float(p.min()), float(p.max()))
    lo, hi = window
    if not lo < hi:
        raise FitError(f"empty fit window {window}")

    def chi2(pc, nu):
        if not (lo <= pc <= hi) or not (0.05 <= nu <= 50.0):
            return float("inf")
        return _quadratic_chi2(d, p, f, sig, pc, nu)[0]

    best = (float("inf"), lo, 1.0)
    for pc in np.arange(lo, hi + 1e-12, 1e-3):
        for nu in np.arange(0.5, 3.0 + 1e-12, 0.05):
            c2 = chi2(pc, nu)
            if c2 < best[0]:
                best = (c2, float(pc), float(nu))

    def objective(theta):
        return chi2(theta[0], theta[1])

    res = minimize(
        objective,
        x0=np.array([best[1], best[2]]),
        method="Nelder-Mead",
        options={"xatol": 1e-7, "fatol": 1e-12, "maxiter": 400},
    )
    p_c, nu = float(res.x[0]), float(res.x[1])
    c2, abc = _quadratic_chi2(d, p, f, sig, p_c, nu)
    if not np.isfinite(c2):
        raise FitError("degenerate design matrix at the fitted optimum")

    # crossing sanity: the ordering of f across distances should reverse
    reliable = True
    if p_c <= lo + 1e-3 or p_c >= hi - 1e-3:
        reliable = False
    lo_order = _distance_order(d, p, f, which="low")
    hi_order = _distance_order(d, p, f, which="high")
    if lo_order is not None and hi_order is not None and lo_order == hi_order:
        reliable = False  # no crossing inside the window

    # jackknife over points for parameter uncertainties
    n_pts = d.size
    thetas = []
    for i in range(n_pts):
        mask = np.arange(n_pts) != i
        try:
            res_i = minimize(
                lambda th: _quadratic_chi2(d[mask], p[mask], f[mask], sig[mask], th[0], th[1])[0]
                if (lo <= th[0] <= hi and 0.05 <= th[1] <= 50.0)
                else float("inf"),
                x0=np.array([p_c, nu]),
                method="Nelder-Mead",
                options={"xatol": 1e-7, "fatol": 1e-12, "maxiter": 200},
            )
            _c2i, abc_i = _quadratic_chi2(
                d[mask], p[mask], f[mask], sig[mask], float(res_i.x[0]), float(res_i.x[1])
            )
            thetas.append([float(res_i.x[0]), float(res_i.x[1]), *abc_i.tolist()])
        except FitError:
            continue
    se: dict[str, float] = {}
    if len(thetas) >= 2:
        th = np.asarray(thetas)
        b = th.shape[0]
        means = th.mean(axis=0)
        ses = np.sqrt((b - 1) / b * ((th - means) ** 2).sum(axis=0))
        se = dict(zip(("p_c", "nu", "A", "B", "C"), ses.tolist()))

    return FitResult(
        p_c=p_c,
        nu=nu,
        A=float(abc[0]),
        B=float(abc[1]),
        C=float(abc[2]),
        se=se,
        residual=c2,
        window=window,
        points_used=int(n_pts),
        reliable=reliable,
    )


def _distance_order(d, p, f, which: str):
    """Ranking of f across distances at the low/high end of the p window."""
    edge = p.min() if which == "low" else p.max()
    vals = {}
    for dv in np.unique(d):
        sel = (d == dv) & (np.abs(p - edge) < 1e-12)
        if not sel.any():
            return None
        vals[float(dv)] = float(f[sel].mean())
    order = tuple(sorted(vals, key=vals.get))
    return order


def crossing_estimate(stats_by_d: dict[int, list[tuple[float, float, float]]]) -> float:
    """p* where two failure-rate curves cross, from a weighted linear fit of
    their difference.  ``stats_by_d`` maps d -> [(p, rate, se), ...] with the
    same p grid for both distances."""
    if len(stats_by_d) != 2:
        raise FitError("crossing estimate needs exactly two distances")
    (d1, pts1), (d2, pts2) = sorted(stats_by_d.items())
    p1 = np.array([x[0] for x in pts1])
    p2 = np.array([x[0] for x in pts2])
    if not np.allclose(p1, p2):
        raise FitError("distances were not run on the same p grid")
    diff = np.array([b[1] - a[1] for a, b in zip(pts1, pts2)])  # f(d2) - f(d1)
    sig = np.sqrt(
        np.array([a[2] ** 2 + b[2] ** 2 for a, b in zip(pts1, pts2)]).clip(1e-12)
    )
    design = np.stack([np.ones_like(p1), p1], axis=1) / sig[:, None]
    ab, *_ = np.linalg.lstsq(design, diff / sig, rcond=None)
    a, b = ab
    if b == 0:
        raise FitError("difference curve has no slope; no crossing")
    return float(-a / b)
