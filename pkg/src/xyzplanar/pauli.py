"""Phase-free n-qubit Pauli operators in symplectic (x, z) bit-vector form.

Position j carries X iff (x=1, z=0), Z iff (x=0, z=1), Y iff (1, 1) and
I iff (0, 0).  Global phases are dropped throughout: decoding success only
depends on cosets of the stabilizer group modulo phase, so the quotient
group is the natural representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError

_CHAR_BITS = {"I": (0, 0), "X": (1, 0), "Z": (0, 1), "Y": (1, 1)}
_BITS_CHAR = {bits: char for char, bits in _CHAR_BITS.items()}


@dataclass(frozen=True, eq=False)
class PauliString:
    """Immutable Pauli operator on ``n`` qubits, phase discarded."""

    x_bits: np.ndarray
    z_bits: np.ndarray

    def __post_init__(self) -> None:
        x = np.asarray(self.x_bits, dtype=np.uint8) & 1
        z = np.asarray(self.z_bits, dtype=np.uint8) & 1
        if x.ndim != 1 or z.ndim != 1 or x.shape != z.shape:
            raise DimensionError("x_bits and z_bits must be equal-length 1-d bit vectors")
        x.setflags(write=False)
        z.setflags(write=False)
        object.__setattr__(self, "x_bits", x)
        object.__setattr__(self, "z_bits", z)

    @property
    def n(self) -> int:
        return self.x_bits.shape[0]

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse a literal over {I, X, Y, Z}, qubit 0 first: "ZZZY" -> x=0001, z=1111."""
        try:
            pairs = [_CHAR_BITS[c] for c in label.upper()]
        except KeyError as exc:
            raise ValueError(f"invalid Pauli character {exc.args[0]!r}") from None
        bits = np.array(pairs, dtype=np.uint8).reshape(-1, 2)
        return cls(bits[:, 0].copy(), bits[:, 1].copy())

    @classmethod
    def from_support(cls, n: int, xs=(), zs=(), ys=()) -> "PauliString":
        """Build from index lists of X-, Z- and Y-supported positions."""
        x = np.zeros(n, dtype=np.uint8)
        z = np.zeros(n, dtype=np.uint8)
        x[list(xs)] = 1
        z[list(zs)] = 1
        for j in ys:
            x[j] = 1
            z[j] = 1
        return cls(x, z)

    def to_label(self) -> str:
        return "".join(_BITS_CHAR[(int(x), int(z))] for x, z in zip(self.x_bits, self.z_bits))

    def key(self) -> bytes:
        """Hashable content key; used for group-membership sets."""
        return self.x_bits.tobytes() + self.z_bits.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.x_bits, other.x_bits)
            and np.array_equal(self.z_bits, other.z_bits)
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __mul__(self, other: "PauliString") -> "PauliString":
        return multiply(self, other)

    def __repr__(self) -> str:
        label = self.to_label()
        if len(label) > 32:
            label = label[:29] + "..."
        return f"PauliString({label!r})"


def _check_same_n(a: PauliString, b: PauliString) -> None:
    if a.n != b.n:
        raise DimensionError(f"length mismatch: {a.n} vs {b.n}")


def symplectic_product(a: PauliString, b: PauliString) -> int:
    """(a.x . b.z + a.z . b.x) mod 2: 0 means commute, 1 means anticommute."""
    _check_same_n(a, b)
    return int((np.dot(a.x_bits, b.z_bits) + np.dot(a.z_bits, b.x_bits)) & 1)


def multiply(a: PauliString, b: PauliString) -> PauliString:
    """Group product up to global phase: componentwise XOR of x and z bits."""
    _check_same_n(a, b)
    return PauliString(a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits)


def weight(a: PauliString) -> int:
    """Number of non-identity positions."""
    return int(np.count_nonzero(a.x_bits | a.z_bits))
