"""Matching decoders: the posterior-reweighted two-stage decoder and the
plain minimum-weight baseline.

Both decoders share the same two-stage engine.  Stage 1 matches the X-check
syndrome on a graph built from H_X, estimating the Z components of the
error.  Stage 2 flips each ZY outcome whose central qubit received a Z
estimate (a Z there anticommutes with the stabilizer's Y), then matches the
adjusted ZY syndrome on a graph built from H_Z, estimating X components.
The posterior decoder differs only in stage 1, where each central qubit's
weight is replaced by the conditional weight given its two adjacent ZY
outcomes; the baseline uses the prior weight everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import XYZ_PLANAR, CodeLayout
from .errors import DimensionError, ParameterError
from .matching import MatchingGraph, decode_graph, weight_of_prob
from .noise import NoiseParams, Syndrome

_SYNDROME_COMBOS = ((0, 0), (0, 1), (1, 0), (1, 1))


def parity_probs(q: float, k: int) -> tuple[float, float]:
    """(E_k, O_k): probability that an even/odd number of the k peripheral
    qubits of a check flip it, each independently with probability q."""
    if not (0.0 <= q <= 1.0):
        raise ParameterError(f"q = {q} out of [0, 1]")
    if k == 2:
        even = (1.0 - q) ** 2 + q * q
        odd = 2.0 * q * (1.0 - q)
    elif k == 3:
        even = (1.0 - q) ** 3 + 3.0 * q * q * (1.0 - q)
        odd = 3.0 * q * (1.0 - q) ** 2 + q ** 3
    else:
        raise ParameterError(f"peripheral count must be 2 or 3, got {k}")
    return even, odd


def posterior(params: NoiseParams, k1: int, k2: int, s1: int, s2: int) -> float:
    """P(central qubit suffered Z or Y | adjacent ZY outcomes s1, s2).

    Factorized over the two peripheral groups of sizes k1 and k2; for
    k1 == k2 this reduces to the usual three-case form, with s1 != s2
    giving back the prior p_y + p_z identically.
    """
    s1, s2 = int(s1) & 1, int(s2) & 1
    if s1 != s2 and k1 == k2:
        return params.p_y + params.p_z
    e1, o1 = parity_probs(params.q, k1)
    e2, o2 = parity_probs(params.q, k2)
    pa = e1 if s1 == 0 else o1  # P(parity of group 1 == s1)
    pa_flip = o1 if s1 == 0 else e1
    pb = e2 if s2 == 0 else o2
    pb_flip = o2 if s2 == 0 else e2
    num = params.p_z * pa_flip * pb_flip + params.p_y * pa * pb
    den = params.p_noflip * pa * pb + params.p_flip * pa_flip * pb_flip
    if den <= 0.0:
        # outcome has probability zero under these params; fall back to prior
        return params.p_y + params.p_z
    return num / den


def _w(prob: float) -> float:
    return float(weight_of_prob(prob))


@dataclass(frozen=True)
class WeightEntry:
    """Posteriors and weights for one (k1, k2) pair, indexed by (s1, s2)."""

    probs: tuple[float, float, float, float]  # order: 00, 01, 10, 11
    weights: tuple[float, float, float, float]

    def prob(self, s1: int, s2: int) -> float:
        return self.probs[2 * (s1 & 1) + (s2 & 1)]

    def weight(self, s1: int, s2: int) -> float:
        return self.weights[2 * (s1 & 1) + (s2 & 1)]


@dataclass(frozen=True)
class WeightTable:
    """Precomputed conditional weights for every peripheral-count pair."""

    params: NoiseParams
    w_prior: float
    entries: dict[tuple[int, int], WeightEntry]

    def entry(self, k1: int, k2: int) -> WeightEntry:
        return self.entries[(k1, k2)]

    def homogeneous_row(self, k: int) -> dict[str, float]:
        """Homogeneous (k1 == k2) view: P_diff, P_00, P_11 and their weights."""
        e = self.entries[(k, k)]
        return {
            "P_diff": e.prob(0, 1),
            "P_00": e.prob(0, 0),
            "P_11": e.prob(1, 1),
            "w_diff": e.weight(0, 1),
            "w_00": e.weight(0, 0),
            "w_11": e.weight(1, 1),
        }


def build_weight_table(params: NoiseParams) -> WeightTable:
    entries = {}
    for k1 in (2, 3):
        for k2 in (2, 3):
            probs = tuple(posterior(params, k1, k2, s1, s2) for s1, s2 in _SYNDROME_COMBOS)
            weights = tuple(_w(p) for p in probs)
            entries[(k1, k2)] = WeightEntry(probs, weights)
    return WeightTable(params, _w(params.p_y + params.p_z), entries)


def weight_table_rows(params: NoiseParams) -> list[dict]:
    """CSV rows for the weight table, one row per peripheral count k in {2, 3}."""
    table = build_weight_table(params)
    rows = []
    for k in (2, 3):
        row = {"p": params.p, "k": k}
        row.update(table.homogeneous_row(k))
        rows.append(row)
    return rows


class _TwoStageEngine:
    """Shared machinery: graph skeletons and the stage-2 flip rule."""

    def __init__(self, layout: CodeLayout, stage2_q: float):
        self.layout = layout
        self.n = layout.n
        self.graph_x = MatchingGraph(layout.H_X)
        self.graph_z = MatchingGraph(layout.H_Z)
        self._h_y = layout.H_Y.astype(np.int64)
        w2 = float(weight_of_prob(stage2_q))
        self.stage2_graph = self.graph_z.with_weights(np.full(self.n, w2))

    def _check_syndrome(self, syndrome: Syndrome) -> None:
        if syndrome.s_x.shape != (self.layout.m_x,) or syndrome.s_zy.shape != (
            self.layout.m_zy,
        ):
            raise DimensionError("syndrome dimensions do not match the layout")

    def run(self, syndrome: Syndrome, stage1_weights: np.ndarray):
        e_z = decode_graph(self.graph_x.with_weights(stage1_weights), syndrome.s_x)
        delta = (self._h_y @ e_z.astype(np.int64)) % 2
        adjusted = syndrome.s_zy ^ delta.astype(np.uint8)
        e_x = decode_graph(self.stage2_graph, adjusted)
        return e_z, e_x


class MwpmDecoder:
    """Baseline decoder: prior weights only.  On the planar code this is the
    usual independent X/Z matching; on the XYZ planar code it is the
    no-reweighting ablation (same stage-2 flip, no posterior weights)."""

    def __init__(self, layout: CodeLayout, params: NoiseParams):
        self.engine = _TwoStageEngine(layout, stage2_q=params.q)
        self.params = params
        w1 = float(weight_of_prob(params.p_y + params.p_z))
        self._stage1 = np.full(layout.n, w1)

    def decode(self, syndrome: Syndrome):
        self.engine._check_syndrome(syndrome)
        return self.engine.run(syndrome, self._stage1)


class PmwpmDecoder:
    """Posterior-reweighted decoder for the XYZ planar code."""

    def __init__(self, layout: CodeLayout, table: WeightTable):
        if layout.kind != XYZ_PLANAR:
            raise ParameterError(
                f"posterior decoding requires an xyz-planar layout, got {layout.kind!r}"
            )
        self.engine = _TwoStageEngine(layout, stage2_q=table.params.q)
        self.table = table
        central = sorted(layout.central_qubits)
        self._central_j = np.array(central, dtype=np.int64)
        self._central_i1 = np.array(
            [layout.central_qubits[j].check1 for j in central], dtype=np.int64
        )
        self._central_i2 = np.array(
            [layout.central_qubits[j].check2 for j in central], dtype=np.int64
        )
        self._central_w = np.array(
            [
                table.entry(layout.central_qubits[j].k1, layout.central_qubits[j].k2).weights
                for j in central
            ],
            dtype=np.float64,
        )
        self._w_prior = table.w_prior

    def stage1_weights(self, s_zy: np.ndarray) -> np.ndarray:
        w = np.full(self.engine.n, self._w_prior)
        if self._central_j.size:
            s1 = s_zy[self._central_i1].astype(np.int64)
            s2 = s_zy[self._central_i2].astype(np.int64)
            w[self._central_j] = self._central_w[
                np.arange(self._central_j.size), 2 * s1 + s2
            ]
        return w

    def decode(self, syndrome: Syndrome):
        self.engine._check_syndrome(syndrome)
        return self.engine.run(syndrome, self.stage1_weights(syndrome.s_zy))


def decode_pmwpm(layout: CodeLayout, table: WeightTable, syndrome: Syndrome):
    """One-shot posterior decode; build a PmwpmDecoder for repeated use."""
    return PmwpmDecoder(layout, table).decode(syndrome)


def decode_mwpm(layout: CodeLayout, params: NoiseParams, syndrome: Syndrome):
    """One-shot baseline decode; build an MwpmDecoder for repeated use."""
    return MwpmDecoder(layout, params).decode(syndrome)


def syndrome_consistent(layout: CodeLayout, syndrome: Syndrome, e_z, e_x) -> bool:
    """Does the correction reproduce the measured syndrome exactly?"""
    e_z = np.asarray(e_z, dtype=np.int64)
    e_x = np.asarray(e_x, dtype=np.int64)
    s_x = (layout.H_X.astype(np.int64) @ e_z) % 2
    s_zy = (layout.H_Y.astype(np.int64) @ e_z + layout.H_Z.astype(np.int64) @ e_x) % 2
    return bool(
        np.array_equal(s_x.astype(np.uint8), syndrome.s_x)
        and np.array_equal(s_zy.astype(np.uint8), syndrome.s_zy)
    )


def correction_to_pauli(e_z, e_x):
    """Fault vectors to a PauliString (x from e_x, z from e_z)."""
    from .pauli import PauliString

    return PauliString(np.asarray(e_x, dtype=np.uint8), np.asarray(e_z, dtype=np.uint8))
