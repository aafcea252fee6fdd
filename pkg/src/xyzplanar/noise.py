"""Biased independent single-qubit Pauli channel and syndrome extraction."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .codes import CodeLayout
from .errors import DimensionError, ParameterError
from .pauli import PauliString

ETA_CUSTOM = "custom"


@dataclass(frozen=True)
class NoiseParams:
    """Per-qubit channel (p_x, p_y, p_z) with derived convenience fields.

    ``eta`` is the bias p_z / (p_x + p_y) used to resolve the triple, the
    string "custom" when the triple was given directly, or math.inf.
    """

    p_x: float
    p_y: float
    p_z: float
    eta: float | str

    def __post_init__(self) -> None:
        for name in ("p_x", "p_y", "p_z"):
            v = getattr(self, name)
            if not (0.0 <= v <= 1.0) or math.isnan(v):
                raise ParameterError(f"{name} = {v} out of [0, 1]")
        if self.p > 1.0 + 1e-12:
            raise ParameterError(f"total error probability {self.p} exceeds 1")

    @property
    def p(self) -> float:
        return self.p_x + self.p_y + self.p_z

    @property
    def p_i(self) -> float:
        return 1.0 - self.p

    @property
    def q(self) -> float:
        """Probability that a peripheral qubit flips its check: p_x + p_y."""
        return self.p_x + self.p_y

    @property
    def p_flip(self) -> float:
        return self.p_x + self.p_z

    @property
    def p_noflip(self) -> float:
        return self.p_i + self.p_y

    def describe(self) -> str:
        if self.eta == ETA_CUSTOM:
            return f"custom(px={self.p_x:g}, py={self.p_y:g}, pz={self.p_z:g})"
        return f"p={self.p:g}, eta={self.eta}"


def resolve_params(p: float, eta: float) -> NoiseParams:
    """Channel from total rate p and bias eta: p_x = p_y = p/(2(eta+1)), p_z = eta*p/(eta+1)."""
    if not (0.0 <= p <= 1.0) or math.isnan(p):
        raise ParameterError(f"p = {p} out of [0, 1]")
    if math.isinf(eta):
        return NoiseParams(0.0, 0.0, p, math.inf)
    if not eta > 0:
        raise ParameterError(f"eta must be positive or inf, got {eta}")
    p_xy = p / (2.0 * (eta + 1.0))
    p_z = eta * p / (eta + 1.0)
    return NoiseParams(p_xy, p_xy, p_z, eta)


def custom_params(p_x: float, p_y: float, p_z: float) -> NoiseParams:
    """Channel from an explicit (p_x, p_y, p_z) triple."""
    return NoiseParams(p_x, p_y, p_z, ETA_CUSTOM)


def trial_rng(master_seed: int, *indices: int) -> np.random.Generator:
    """Independent per-trial stream derived from (master seed, indices)."""
    return np.random.default_rng([int(master_seed) & 0xFFFFFFFF, *[int(i) for i in indices]])


def sample_error(params: NoiseParams, n: int, rng: np.random.Generator) -> PauliString:
    """I.i.d. per-qubit error: I, X, Y, Z with (p_i, p_x, p_y, p_z)."""
    u = rng.random(n)
    is_x = u < params.p_x
    is_y = (u >= params.p_x) & (u < params.p_x + params.p_y)
    is_z = (u >= params.p_x + params.p_y) & (u < params.p)
    x = (is_x | is_y).astype(np.uint8)
    z = (is_z | is_y).astype(np.uint8)
    return PauliString(x, z)


@dataclass(frozen=True)
class Syndrome:
    """Measurement outcome bits for the X checks and the Z/ZY checks."""

    s_x: np.ndarray
    s_zy: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(self, "s_x", np.asarray(self.s_x, dtype=np.uint8) & 1)
        object.__setattr__(self, "s_zy", np.asarray(self.s_zy, dtype=np.uint8) & 1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Syndrome):
            return NotImplemented
        return np.array_equal(self.s_x, other.s_x) and np.array_equal(self.s_zy, other.s_zy)


def syndrome_of(layout: CodeLayout, error: PauliString) -> Syndrome:
    """s_x = H_X . e_z, s_zy = H_Y . e_z + H_Z . e_x (all mod 2)."""
    if error.n != layout.n:
        raise DimensionError(f"error acts on {error.n} qubits, layout has {layout.n}")
    e_x = error.x_bits.astype(np.int64)
    e_z = error.z_bits.astype(np.int64)
    s_x = (layout.H_X.astype(np.int64) @ e_z) % 2
    s_zy = (layout.H_Y.astype(np.int64) @ e_z + layout.H_Z.astype(np.int64) @ e_x) % 2
    return Syndrome(s_x.astype(np.uint8), s_zy.astype(np.uint8))
