"""Small dense GF(2) linear-algebra helpers (row reduction, nullspace)."""

from __future__ import annotations

import numpy as np


def rref(mat: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(2). Returns (rref matrix, pivot columns)."""
    m = (np.asarray(mat, dtype=np.uint8) & 1).copy()
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        hits = np.nonzero(m[r:, c])[0]
        if hits.size == 0:
            continue
        pivot = r + int(hits[0])
        if pivot != r:
            m[[r, pivot]] = m[[pivot, r]]
        others = np.nonzero(m[:, c])[0]
        others = others[others != r]
        if others.size:
            m[others] ^= m[r]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(mat: np.ndarray) -> int:
    _, pivots = rref(mat)
    return len(pivots)


def nullspace(mat: np.ndarray) -> np.ndarray:
    """Basis of the right nullspace over GF(2), one vector per row."""
    m, pivots = rref(mat)
    cols = m.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            if m[r, fc]:
                basis[i, pc] = 1
    return basis


def in_rowspace(mat_rref: np.ndarray, pivots: list[int], vec: np.ndarray) -> bool:
    """Membership test against a matrix already in RREF."""
    v = (np.asarray(vec, dtype=np.uint8) & 1).copy()
    for r, pc in enumerate(pivots):
        if v[pc]:
            v ^= mat_rref[r]
    return not v.any()
