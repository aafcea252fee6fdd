"""Planar and XYZ planar code construction, validation, and serialization.

Lattice convention (fixed so the check matrices are reproducible byte for
byte): sites (r, c) with r, c in [0, 2d-2], zero-indexed.  Data qubits sit
on sites with r + c even and are numbered row-major.  X-measurement sites
are (r even, c odd), Z/ZY-measurement sites are (r odd, c even), each
numbered row-major within its own type.  A measurement site couples to the
(up to) four adjacent data sites; left/right columns give weight-3 Z/ZY
checks and top/bottom rows give weight-3 X checks.

For the XYZ planar code the data rows r in {2, 6, 10, ...} (r = 2 mod 4,
one-indexed rows 3, 7, 11, ...) carry the Y couplings: the ZY check at odd
row r places its Y on the data qubit directly below (r = 1 mod 4) or above
(r = 3 mod 4), so every such data qubit is the shared "central" qubit of
exactly two ZY checks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from . import gf2
from .errors import ParameterError, StructureError
from .pauli import PauliString, symplectic_product

PLANAR = "planar"
XYZ_PLANAR = "xyz-planar"


class CentralQubit(NamedTuple):
    """The two ZY checks sharing a central qubit and their peripheral counts."""

    check1: int
    check2: int
    k1: int
    k2: int


@dataclass(frozen=True, eq=False)
class CodeLayout:
    """One code instance; treat as immutable after construction."""

    kind: str
    d: int
    n: int
    x_checks: list[PauliString]
    zy_checks: list[PauliString]
    H_X: np.ndarray
    H_Y: np.ndarray
    H_Z: np.ndarray
    logical_x: PauliString
    logical_z: PauliString
    central_qubits: dict[int, CentralQubit]
    coords: list[tuple[int, int]] = field(default_factory=list)

    @property
    def m_x(self) -> int:
        return len(self.x_checks)

    @property
    def m_zy(self) -> int:
        return len(self.zy_checks)

    def stabilizers(self) -> list[PauliString]:
        return list(self.x_checks) + list(self.zy_checks)


@dataclass
class ValidationReport:
    """Accumulated invariant violations; empty means the layout is valid."""

    problems: list[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return not self.problems

    def add(self, msg: str) -> None:
        self.problems.append(msg)

    def __str__(self) -> str:
        if self.is_valid:
            return "layout valid"
        return "\n".join(self.problems)


def _check_distance(d: int) -> None:
    if not isinstance(d, (int, np.integer)) or d < 3 or d % 2 == 0:
        raise ParameterError(f"distance must be odd and >= 3, got {d!r}")


def _lattice(d: int):
    """Site enumeration: data index map plus measurement-site lists."""
    span = 2 * d - 1
    data_index: dict[tuple[int, int], int] = {}
    coords: list[tuple[int, int]] = []
    for r in range(span):
        for c in range(span):
            if (r + c) % 2 == 0:
                data_index[(r, c)] = len(coords)
                coords.append((r, c))
    x_sites = [(r, c) for r in range(0, span, 2) for c in range(1, span, 2)]
    zy_sites = [(r, c) for r in range(1, span, 2) for c in range(0, span, 2)]
    return data_index, coords, x_sites, zy_sites


def _neighbors(site: tuple[int, int], d: int) -> list[tuple[int, int]]:
    span = 2 * d - 1
    r, c = site
    out = []
    for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
        if 0 <= rr < span and 0 <= cc < span:
            out.append((rr, cc))
    return out


def check_matrices(
    x_checks: list[PauliString], zy_checks: list[PauliString]
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(H_X, H_Y, H_Z) from the stabilizer lists.

    H_X is the support of the pure-X checks; H_Y and H_Z are the x- and
    z-components of the Z/ZY checks (H_Y marks exactly the Y positions).
    """
    H_X = np.stack([s.x_bits for s in x_checks]) if x_checks else np.zeros((0, 0), np.uint8)
    H_Y = np.stack([s.x_bits for s in zy_checks]) if zy_checks else np.zeros((0, 0), np.uint8)
    H_Z = np.stack([s.z_bits for s in zy_checks]) if zy_checks else np.zeros((0, 0), np.uint8)
    return H_X, H_Y, H_Z


def _build(kind: str, d: int) -> CodeLayout:
    _check_distance(d)
    data_index, coords, x_sites, zy_sites = _lattice(d)
    n = len(coords)

    x_checks = []
    for site in x_sites:
        qubits = [data_index[s] for s in _neighbors(site, d)]
        x_checks.append(PauliString.from_support(n, xs=qubits))

    zy_checks = []
    y_of_check: list[int | None] = []
    for site in zy_sites:
        r, c = site
        nbrs = _neighbors(site, d)
        if kind == XYZ_PLANAR:
            y_site = (r + 1, c) if r % 4 == 1 else (r - 1, c)
            if y_site not in data_index:
                raise StructureError(f"no Y partner for ZY check at {site}")
            y_qubit = data_index[y_site]
            zs = [data_index[s] for s in nbrs if s != y_site]
            zy_checks.append(PauliString.from_support(n, zs=zs, ys=[y_qubit]))
            y_of_check.append(y_qubit)
        else:
            zy_checks.append(PauliString.from_support(n, zs=[data_index[s] for s in nbrs]))
            y_of_check.append(None)

    H_X, H_Y, H_Z = check_matrices(x_checks, zy_checks)

    central: dict[int, CentralQubit] = {}
    if kind == XYZ_PLANAR:
        for j in range(n):
            rows = np.nonzero(H_Y[:, j])[0]
            if rows.size == 0:
                continue
            if rows.size != 2:
                raise StructureError(f"qubit {j} is Y-coupled to {rows.size} checks")
            i1, i2 = int(rows[0]), int(rows[1])
            k1 = int(H_Z[i1].sum()) - 1
            k2 = int(H_Z[i2].sum()) - 1
            central[j] = CentralQubit(i1, i2, k1, k2)

    span = 2 * d - 1
    prefer_z = [
        np.array([data_index[(r, c)] for c in range(0, span, 2)], dtype=np.int64)
        for r in range(0, span, 2)
        if r % 4 != 2  # Y-free data rows only
    ]
    prefer_x = [
        np.array([data_index[(r, c)] for r in range(0, span, 2)], dtype=np.int64)
        for c in range(0, span, 2)
    ]
    logical_x, logical_z = compute_logicals(
        x_checks, zy_checks, n, prefer_z=prefer_z, prefer_x=prefer_x
    )

    return CodeLayout(
        kind=kind,
        d=d,
        n=n,
        x_checks=x_checks,
        zy_checks=zy_checks,
        H_X=H_X,
        H_Y=H_Y,
        H_Z=H_Z,
        logical_x=logical_x,
        logical_z=logical_z,
        central_qubits=central,
        coords=coords,
    )


def build_planar(d: int) -> CodeLayout:
    """Square-lattice planar code with n = d**2 + (d-1)**2 data qubits."""
    return _build(PLANAR, d)


def build_xyz_planar(d: int) -> CodeLayout:
    """Planar layout with every Z check turned into a Z2Y or Z3Y check."""
    return _build(XYZ_PLANAR, d)


def build_code(kind: str, d: int) -> CodeLayout:
    if kind == PLANAR:
        return build_planar(d)
    if kind == XYZ_PLANAR:
        return build_xyz_planar(d)
    raise ParameterError(f"unknown code kind {kind!r}")


def _symplectic_matrix(stabs: list[PauliString]) -> np.ndarray:
    """Stabilizers as rows [x | z] of a binary matrix."""
    return np.concatenate(
        [np.stack([s.x_bits for s in stabs]), np.stack([s.z_bits for s in stabs])], axis=1
    )


def compute_logicals(
    x_checks: list[PauliString],
    zy_checks: list[PauliString],
    n: int,
    prefer_z: list[np.ndarray] | None = None,
    prefer_x: list[np.ndarray] | None = None,
) -> tuple[PauliString, PauliString]:
    """Anticommuting logical pair from GF(2) linear algebra.

    Finds two operators in the normalizer of the stabilizer group but
    outside its row space.  When a candidate support in ``prefer_z`` gives a
    valid pure-Z logical (e.g. a Y-free lattice row) it is used for the Z
    logical, and similarly ``prefer_x`` for pure-X column strings.

    Raises StructureError when the group does not encode exactly one qubit.
    """
    stabs = list(x_checks) + list(zy_checks)
    S = _symplectic_matrix(stabs)
    m = S.shape[0]
    # v commutes with all rows of S iff  S_z . v_x + S_x . v_z = 0
    A = np.concatenate([S[:, n:], S[:, :n]], axis=1)
    normal = gf2.nullspace(A)
    S_rref, S_piv = gf2.rref(S)
    if len(S_piv) != m:
        raise StructureError("dependent stabilizer generators")
    if 2 * n - len(S_piv) - normal.shape[0] != 0:
        raise StructureError("inconsistent normalizer dimension")

    def reduce_mod_rowspace(v: np.ndarray) -> np.ndarray:
        w = v.copy()
        for r, pc in enumerate(S_piv):
            if w[pc]:
                w ^= S_rref[r]
        return w

    picked: list[np.ndarray] = []
    residues: list[tuple[int, np.ndarray]] = []  # (pivot, reduced vector)
    for v in normal:
        w = reduce_mod_rowspace(v)
        for piv, rvec in residues:
            if w[piv]:
                w ^= rvec
        if w.any():
            residues.append((int(np.nonzero(w)[0][0]), w))
            picked.append(v)
        if len(picked) == 2:
            break
    if len(picked) != 2:
        raise StructureError(
            f"expected one encoded qubit, found {normal.shape[0] - m} logical degrees"
        )

    def as_pauli(v: np.ndarray) -> PauliString:
        return PauliString(v[:n], v[n:])

    def sp(u: np.ndarray, v: np.ndarray) -> int:
        return int((np.dot(u[:n], v[n:]) + np.dot(u[n:], v[:n])) % 2)

    u, w = picked
    if sp(u, w) != 1:
        raise StructureError("logical candidates do not anticommute")

    def try_preferred(supports: list[np.ndarray] | None, pure_z: bool) -> np.ndarray | None:
        for support in supports or []:
            v = np.zeros(2 * n, dtype=np.uint8)
            v[(support + n) if pure_z else support] = 1
            if np.any((A @ v) % 2):
                continue  # not in the normalizer
            if not gf2.in_rowspace(S_rref, S_piv, v):
                return v
        return None

    zbar = try_preferred(prefer_z, pure_z=True)
    if zbar is None:
        zbar = u if np.all(u[:n] == 0) else (w if np.all(w[:n] == 0) else u)
    xbar = None
    for cand in [try_preferred(prefer_x, pure_z=False), u, w, (u ^ w)]:
        if cand is not None and sp(cand, zbar) == 1:
            xbar = cand
            break
    if xbar is None:
        raise StructureError("could not select an anticommuting logical pair")
    return as_pauli(xbar), as_pauli(zbar)


def validate_layout(layout: CodeLayout) -> ValidationReport:
    """Report every violated layout invariant; empty report means valid."""
    rep = ValidationReport()
    d, n = layout.d, layout.n
    stabs = layout.stabilizers()

    if n != 2 * d * d - 2 * d + 1:
        rep.add(f"qubit count {n} != 2d^2-2d+1 = {2 * d * d - 2 * d + 1}")
    if len(stabs) != n - 1:
        rep.add(f"stabilizer count {len(stabs)} != n-1 = {n - 1}")

    H_X, H_Y, H_Z = check_matrices(layout.x_checks, layout.zy_checks)
    if not (
        np.array_equal(H_X, layout.H_X)
        and np.array_equal(H_Y, layout.H_Y)
        and np.array_equal(H_Z, layout.H_Z)
    ):
        rep.add("H matrices disagree with the stabilizer Pauli strings")
    if any(s.z_bits.any() for s in layout.x_checks):
        rep.add("x_checks are not pure X")

    # pairwise commutation via one symplectic Gram matrix
    X = np.stack([s.x_bits for s in stabs]).astype(np.int64)
    Z = np.stack([s.z_bits for s in stabs]).astype(np.int64)
    gram = (X @ Z.T + Z @ X.T) % 2
    bad = np.argwhere(np.triu(gram, k=1))
    for i, j in bad[:20]:
        rep.add(f"stabilizers {int(i)} and {int(j)} anticommute")
    if len(bad) > 20:
        rep.add(f"... and {len(bad) - 20} more anticommuting pairs")

    for name, op in (("logical_x", layout.logical_x), ("logical_z", layout.logical_z)):
        bad_idx = [i for i, s in enumerate(stabs) if symplectic_product(op, s)]
        if bad_idx:
            rep.add(f"{name} anticommutes with stabilizers {bad_idx[:10]}")
    if symplectic_product(layout.logical_x, layout.logical_z) != 1:
        rep.add("logical_x and logical_z do not anticommute")

    S = _symplectic_matrix(stabs)
    S_rref, S_piv = gf2.rref(S)
    for name, op in (("logical_x", layout.logical_x), ("logical_z", layout.logical_z)):
        v = np.concatenate([op.x_bits, op.z_bits])
        if gf2.in_rowspace(S_rref, S_piv, v):
            rep.add(f"{name} is a stabilizer-group element (trivial logical)")

    col_weights = layout.H_Y.sum(axis=0)
    if layout.kind == PLANAR:
        if col_weights.any():
            rep.add("planar layout has nonzero H_Y")
    else:
        y_count = int(np.count_nonzero(col_weights))
        expected = ((d - 1) // 2) * d
        if y_count != expected:
            rep.add(f"Y-involved qubit count {y_count} != {expected}")
        bad_cols = np.nonzero((col_weights != 0) & (col_weights != 2))[0]
        if bad_cols.size:
            rep.add(f"H_Y columns with weight not in {{0,2}}: {bad_cols[:10].tolist()}")
        for j, info in layout.central_qubits.items():
            rows = np.nonzero(layout.H_Y[:, j])[0].tolist()
            if sorted(rows) != sorted([info.check1, info.check2]):
                rep.add(f"central qubit {j} map disagrees with H_Y")
            for check, k in ((info.check1, info.k1), (info.check2, info.k2)):
                if int(layout.H_Z[check].sum()) - 1 != k:
                    rep.add(f"central qubit {j}: check {check} peripheral count != {k}")
        if set(layout.central_qubits) != set(np.nonzero(col_weights)[0].tolist()):
            rep.add("central_qubits keys do not match H_Y support")
    return rep


def to_json_dict(layout: CodeLayout) -> dict:
    """Serializable code description (sparse index lists, Pauli literals)."""

    def stab_entry(s: PauliString) -> dict:
        idx = np.nonzero(s.x_bits | s.z_bits)[0]
        ops = "".join(s.to_label()[j] for j in idx)
        return {"qubits": idx.tolist(), "ops": ops}

    def rows_as_lists(H: np.ndarray) -> list[list[int]]:
        return [np.nonzero(row)[0].tolist() for row in H]

    return {
        "kind": layout.kind,
        "d": layout.d,
        "n": layout.n,
        "y_distribution": "paired-rows" if layout.kind == XYZ_PLANAR else None,
        "coords": [list(c) for c in layout.coords],
        "stabilizers": {
            "x": [stab_entry(s) for s in layout.x_checks],
            "zy": [stab_entry(s) for s in layout.zy_checks],
        },
        "h_x": rows_as_lists(layout.H_X),
        "h_y": rows_as_lists(layout.H_Y),
        "h_z": rows_as_lists(layout.H_Z),
        "logical_x": stab_entry(layout.logical_x),
        "logical_z": stab_entry(layout.logical_z),
        "central_qubits": {str(j): list(info) for j, info in layout.central_qubits.items()},
    }


def from_json_dict(doc: dict) -> CodeLayout:
    n = int(doc["n"])

    def parse_stab(entry: dict) -> PauliString:
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        for j, op in zip(entry["qubits"], entry["ops"]):
            if op in ("X", "Y"):
                x[j] = 1
            if op in ("Z", "Y"):
                z[j] = 1
        return PauliString(x, z)

    x_checks = [parse_stab(e) for e in doc["stabilizers"]["x"]]
    zy_checks = [parse_stab(e) for e in doc["stabilizers"]["zy"]]
    H_X, H_Y, H_Z = check_matrices(x_checks, zy_checks)
    central = {
        int(j): CentralQubit(*info) for j, info in doc.get("central_qubits", {}).items()
    }
    return CodeLayout(
        kind=doc["kind"],
        d=int(doc["d"]),
        n=n,
        x_checks=x_checks,
        zy_checks=zy_checks,
        H_X=H_X,
        H_Y=H_Y,
        H_Z=H_Z,
        logical_x=parse_stab(doc["logical_x"]),
        logical_z=parse_stab(doc["logical_z"]),
        central_qubits=central,
        coords=[tuple(c) for c in doc.get("coords", [])],
    )


def save_json(layout: CodeLayout, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(to_json_dict(layout), fh, indent=1)


def load_json(path: str) -> CodeLayout:
    with open(path) as fh:
        return from_json_dict(json.load(fh))
