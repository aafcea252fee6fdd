"""Detector-graph decoding core.

Builds a weighted detector graph from a parity-check matrix (one edge per
check-matrix column, plus one virtual boundary node absorbing the
single-detector columns), forms the complete defect graph with Dijkstra
shortest paths, finds a minimum-weight perfect matching, and converts the
matching back into a fault vector.

Negative-weight normalization ("preflip"): a fault probability above 1/2
gives a negative log-likelihood weight, which neither Dijkstra nor the
matching stage accepts.  Such faults are committed up front, the syndrome
parities of their endpoints are toggled, and the edge keeps |w|.  This
preserves the exact optimum of the total-weight objective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.csgraph import dijkstra

from . import blossom
from .errors import DecodeError, DimensionError, StructureError

PROB_EPS = 1e-12


class GraphEdge(NamedTuple):
    u: int
    v: int  # may be the boundary node index
    weight: float
    fault_id: int


def weight_of_prob(p) -> np.ndarray:
    """Log-likelihood weight ln((1-p)/p), with p clamped to [eps, 1-eps]."""
    p = np.clip(np.asarray(p, dtype=np.float64), PROB_EPS, 1.0 - PROB_EPS)
    return np.log((1.0 - p) / p)


class MatchingGraph:
    """Static structure of a detector graph for one check matrix.

    The edge set depends only on the check matrix; per-decode weight
    vectors are applied with :meth:`with_weights`, which is cheap.
    """

    def __init__(self, check: np.ndarray):
        check = np.asarray(check, dtype=np.uint8) & 1
        if check.ndim != 2:
            raise DimensionError("check matrix must be 2-d")
        m, n = check.shape
        self.num_detectors = m
        self.boundary = m
        self.n_faults = n
        self.check = check
        col_u = np.full(n, -1, dtype=np.int64)
        col_v = np.full(n, -1, dtype=np.int64)
        untracked = []
        seen_pairs: dict[tuple[int, int], int] = {}
        for j in range(n):
            rows = np.nonzero(check[:, j])[0]
            if rows.size > 2:
                raise StructureError(
                    f"column {j} has {rows.size} ones; the check matrix is not matchable"
                )
            if rows.size == 0:
                untracked.append(j)
                continue
            u = int(rows[0])
            v = int(rows[1]) if rows.size == 2 else self.boundary
            col_u[j] = u
            col_v[j] = v
            seen_pairs.setdefault((u, v), j)
        self.col_u = col_u
        self.col_v = col_v
        self.untracked = untracked
        # a node pair served by several faults keeps only the lightest edge,
        # resolved per weight vector; remember whether that work is needed
        tracked = int((col_u >= 0).sum())
        self.has_parallel_edges = len(seen_pairs) != tracked

        nodes = m + 1
        self.num_nodes = nodes
        tracked_j = np.nonzero(col_u >= 0)[0]
        rows = np.concatenate([col_u[tracked_j], col_v[tracked_j]])
        cols = np.concatenate([col_v[tracked_j], col_u[tracked_j]])
        faults = np.concatenate([tracked_j, tracked_j])
        order = np.lexsort((cols, rows))
        self._csr_rows = rows[order]
        self._csr_cols = cols[order]
        self._csr_faults = faults[order]
        self._indptr = np.searchsorted(self._csr_rows, np.arange(nodes + 1))
        self._edge_fault_of_pair = {
            (int(u), int(v)): int(j)
            for (u, v), j in seen_pairs.items()
        }
        self._edge_fault_of_pair.update(
            {(v, u): j for (u, v), j in list(self._edge_fault_of_pair.items())}
        )

    def with_probs(self, fault_probs) -> "DecodingGraph":
        probs = np.asarray(fault_probs, dtype=np.float64)
        if probs.shape != (self.n_faults,):
            raise DimensionError(
                f"expected {self.n_faults} fault probabilities, got {probs.shape}"
            )
        if (probs < 0).any() or (probs > 1).any():
            raise StructureError("fault probabilities must lie in [0, 1]")
        return self.with_weights(weight_of_prob(probs))

    def with_weights(self, weights) -> "DecodingGraph":
        weights = np.asarray(weights, dtype=np.float64)
        if weights.shape != (self.n_faults,):
            raise DimensionError(f"expected {self.n_faults} fault weights, got {weights.shape}")
        preflip = (weights < 0).astype(np.uint8)
        preflip[self.col_u < 0] = 0  # untracked faults are never committed
        parity = (self.check.astype(np.int64) @ preflip.astype(np.int64)) % 2
        return DecodingGraph(self, np.abs(weights), preflip, parity.astype(np.uint8))


@dataclass
class DecodingGraph:
    """A MatchingGraph with concrete (normalized, non-negative) weights."""

    structure: MatchingGraph
    abs_weights: np.ndarray
    preflip: np.ndarray
    parity_adjust: np.ndarray
    _csr: sp.csr_matrix | None = field(default=None, repr=False)

    @property
    def num_detectors(self) -> int:
        return self.structure.num_detectors

    @property
    def boundary(self) -> int:
        return self.structure.boundary

    @property
    def untracked(self) -> list[int]:
        return self.structure.untracked

    def edges(self) -> list[GraphEdge]:
        s = self.structure
        out = []
        for j in range(s.n_faults):
            if s.col_u[j] >= 0:
                out.append(GraphEdge(int(s.col_u[j]), int(s.col_v[j]), float(self.abs_weights[j]), j))
        return out

    def dump(self) -> str:
        """Plain-text edge list (u, v, weight, fault_id) for differential tests."""
        lines = [f"{e.u} {e.v} {e.weight!r} {e.fault_id}" for e in self.edges()]
        return "\n".join(lines)

    def csr(self) -> sp.csr_matrix:
        if self._csr is None:
            s = self.structure
            data = self.abs_weights[s._csr_faults]
            if s.has_parallel_edges:
                # collapse duplicates to the minimum weight, tie-break by fault id
                mat = sp.csr_matrix((s.num_nodes, s.num_nodes), dtype=np.float64)
                best: dict[tuple[int, int], tuple[float, int]] = {}
                for u, v, w, j in self.edges():
                    key = (min(u, v), max(u, v))
                    if key not in best or (w, j) < best[key]:
                        best[key] = (w, j)
                rows, cols, vals = [], [], []
                for (u, v), (w, _j) in best.items():
                    rows += [u, v]
                    cols += [v, u]
                    vals += [w, w]
                mat = sp.csr_matrix(
                    (vals, (rows, cols)), shape=(s.num_nodes, s.num_nodes), dtype=np.float64
                )
                self._csr = mat
            else:
                self._csr = sp.csr_matrix(
                    (data, s._csr_cols, s._indptr),
                    shape=(s.num_nodes, s.num_nodes),
                    copy=False,
                )
        return self._csr

    def fault_between(self, u: int, v: int) -> int:
        s = self.structure
        if not s.has_parallel_edges:
            return s._edge_fault_of_pair[(u, v)]
        best = None
        for j in range(s.n_faults):
            if (s.col_u[j] == u and s.col_v[j] == v) or (s.col_u[j] == v and s.col_v[j] == u):
                cand = (float(self.abs_weights[j]), j)
                if best is None or cand < best:
                    best = cand
        if best is None:
            raise DecodeError(f"no edge between nodes {u} and {v}")
        return best[1]


def build_decoding_graph(check, fault_probs) -> DecodingGraph:
    """Detector graph from a check matrix and per-fault probabilities."""
    return MatchingGraph(check).with_probs(fault_probs)


@dataclass
class DefectGraph:
    """Complete graph over defects with Dijkstra shortest-path weights."""

    graph: DecodingGraph
    nodes: np.ndarray  # detector indices, boundary possibly last
    weights: np.ndarray  # (k, k) pairwise distances
    dist: np.ndarray  # (k, num_nodes) full distance rows
    preds: np.ndarray  # (k, num_nodes) predecessor rows

    @property
    def has_boundary(self) -> bool:
        return bool(self.nodes.size) and int(self.nodes[-1]) == self.graph.boundary

    def path_faults(self, i: int, j: int) -> list[int]:
        """Fault ids realizing the shortest path between defect slots i and j."""
        target = int(self.nodes[j])
        cur = target
        out = []
        preds = self.preds[i]
        while cur != self.nodes[i]:
            prev = int(preds[cur])
            if prev < 0:
                raise DecodeError(f"broken predecessor chain from {self.nodes[i]} to {target}")
            out.append(self.graph.fault_between(prev, cur))
            cur = prev
        return out


def form_defect_graph(graph: DecodingGraph, syndrome_bits) -> DefectGraph:
    """Defect set (plus boundary on odd parity) with pairwise Dijkstra weights.

    ``syndrome_bits`` must already include the preflip parity adjustments.
    """
    syn = np.asarray(syndrome_bits, dtype=np.uint8) & 1
    if syn.shape != (graph.num_detectors,):
        raise DimensionError(
            f"syndrome length {syn.shape} != detector count {graph.num_detectors}"
        )
    defects = np.nonzero(syn)[0].astype(np.int64)
    if defects.size % 2 == 1:
        defects = np.concatenate([defects, [graph.boundary]])
    if defects.size == 0:
        k = 0
        return DefectGraph(
            graph,
            defects,
            np.zeros((0, 0)),
            np.zeros((0, graph.structure.num_nodes)),
            np.full((0, graph.structure.num_nodes), -9999, dtype=np.int32),
        )
    dist, preds = dijkstra(
        graph.csr(), directed=True, indices=defects, return_predecessors=True
    )
    W = dist[:, defects]
    if not np.isfinite(W).all():
        raise DecodeError("defect with no path to any other defect or the boundary")
    return DefectGraph(graph, defects, W, dist, preds)


def min_weight_perfect_matching(defect_graph: DefectGraph) -> list[tuple[int, int]]:
    """Matched pairs of defect slots minimizing total path weight."""
    return blossom.min_weight_perfect_matching(defect_graph.weights)


def matching_to_correction(
    graph: DecodingGraph,
    defect_graph: DefectGraph,
    matching: list[tuple[int, int]],
) -> np.ndarray:
    """Fault bit vector: XOR of all matched paths, then XOR of the preflips."""
    correction = graph.preflip.copy()
    for i, j in matching:
        for fault in defect_graph.path_faults(i, j):
            correction[fault] ^= 1
    return correction


def decode_graph(graph: DecodingGraph, syndrome_bits) -> np.ndarray:
    """Full pipeline: adjust parities, match defects, return the fault vector."""
    syn = np.asarray(syndrome_bits, dtype=np.uint8) & 1
    adjusted = syn ^ graph.parity_adjust
    dg = form_defect_graph(graph, adjusted)
    pairs = min_weight_perfect_matching(dg)
    return matching_to_correction(graph, dg, pairs)
