import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from xyzplanar.errors import DimensionError
from xyzplanar.pauli import PauliString, multiply, symplectic_product, weight


def test_label_round_trip():
    p = PauliString.from_label("ZZZY")
    assert p.x_bits.tolist() == [0, 0, 0, 1]
    assert p.z_bits.tolist() == [1, 1, 1, 1]
    assert p.to_label() == "ZZZY"


def test_label_rejects_garbage():
    with pytest.raises(ValueError):
        PauliString.from_label("XQZ")


def test_anticommutation_single_qubit():
    assert symplectic_product(PauliString.from_label("X"), PauliString.from_label("Z")) == 1


def test_anticommutation_zzz_y_vs_z4():
    a = PauliString.from_label("ZZZY")
    assert symplectic_product(a, PauliString.from_label("IIIZ")) == 1
    assert symplectic_product(a, PauliString.from_label("IIIY")) == 0
    assert symplectic_product(a, PauliString.from_label("IIIX")) == 1
    assert symplectic_product(a, PauliString.from_label("XIII")) == 1
    assert symplectic_product(a, PauliString.from_label("YIII")) == 1


def test_multiply_involution_and_xz():
    a = PauliString.from_label("XYZI")
    assert multiply(a, a) == PauliString.identity(4)
    x, z = PauliString.from_label("X"), PauliString.from_label("Z")
    assert multiply(x, z) == PauliString.from_label("Y")


def test_weight_counts_non_identity():
    assert weight(PauliString.identity(7)) == 0
    assert weight(PauliString.from_label("IIIY")) == 1
    assert weight(PauliString.from_label("ZZZY")) == 4


def test_length_mismatch_raises():
    with pytest.raises(DimensionError):
        symplectic_product(PauliString.identity(3), PauliString.identity(4))
    with pytest.raises(DimensionError):
        multiply(PauliString.identity(3), PauliString.identity(4))


def _random_pauli(draw, n):
    bits = draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    x = np.array([b & 1 for b in bits], dtype=np.uint8)
    z = np.array([b >> 1 for b in bits], dtype=np.uint8)
    return PauliString(x, z)


@st.composite
def pauli_triples(draw):
    n = draw(st.integers(1, 24))
    return tuple(_random_pauli(draw, n) for _ in range(3))


@given(pauli_triples())
@settings(max_examples=200, deadline=None)
def test_symplectic_product_symmetric_bilinear(triple):
    a, b, c = triple
    assert symplectic_product(a, b) == symplectic_product(b, a)
    lhs = symplectic_product(multiply(a, b), c)
    rhs = symplectic_product(a, c) ^ symplectic_product(b, c)
    assert lhs == rhs


@given(pauli_triples())
@settings(max_examples=100, deadline=None)
def test_multiply_associative_self_inverse(triple):
    a, b, c = triple
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(multiply(a, b), b) == a


def test_from_support():
    p = PauliString.from_support(5, xs=[0], zs=[2], ys=[4])
    assert p.to_label() == "XIZIY"


def test_hash_and_key_consistency():
    a = PauliString.from_label("XYZ")
    b = PauliString.from_label("XYZ")
    assert a == b and hash(a) == hash(b) and a.key() == b.key()
    assert a != PauliString.from_label("XYI")
