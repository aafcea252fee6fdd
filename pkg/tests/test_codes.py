import dataclasses

import numpy as np
import pytest

from xyzplanar import codes
from xyzplanar.errors import ParameterError, StructureError
from xyzplanar.pauli import PauliString, multiply, symplectic_product


@pytest.mark.parametrize("d,expected_n", [(3, 13), (5, 41), (7, 85), (9, 145)])
def test_qubit_count(d, expected_n):
    assert codes.build_planar(d).n == expected_n
    assert expected_n == 2 * d * d - 2 * d + 1


def test_planar5_check_counts():
    lay = codes.build_planar(5)
    assert lay.n == 41
    assert lay.m_x == 20
    assert lay.m_zy == 20


@pytest.mark.parametrize("d", [4, 2, 1, 0, -3])
def test_even_or_small_d_rejected(d):
    with pytest.raises(ParameterError):
        codes.build_planar(d)
    with pytest.raises(ParameterError):
        codes.build_xyz_planar(d)


@pytest.mark.parametrize("kind", [codes.PLANAR, codes.XYZ_PLANAR])
@pytest.mark.parametrize("d", [3, 5, 7, 9, 11])
def test_layouts_validate(kind, d):
    lay = codes.build_code(kind, d)
    report = codes.validate_layout(lay)
    assert report.is_valid, str(report)


@pytest.mark.parametrize("d,count", [(3, 3), (5, 10), (7, 21), (9, 36), (11, 55)])
def test_y_qubit_count(d, count):
    lay = codes.build_xyz_planar(d)
    col = lay.H_Y.sum(axis=0)
    assert int((col > 0).sum()) == count == (d * d - d) // 2


def test_xyz3_y_row(xyz3):
    # all Y-involved qubits of d=3 sit in lattice row 3 (one-indexed)
    y_qubits = np.nonzero(xyz3.H_Y.sum(axis=0))[0]
    assert len(y_qubits) == 3
    assert all(xyz3.coords[j][0] == 2 for j in y_qubits)


def test_h_y_columns_zero_or_two(xyz5):
    col = xyz5.H_Y.sum(axis=0)
    assert set(np.unique(col).tolist()) <= {0, 2}


def test_planar_h_y_all_zero(planar5):
    assert not planar5.H_Y.any()


def test_planar_and_xyz_share_h_x():
    for d in (3, 5, 7):
        a = codes.build_planar(d)
        b = codes.build_xyz_planar(d)
        assert np.array_equal(a.H_X, b.H_X)
        assert a.n == b.n


def test_zy_weights_are_3_or_4(xyz5):
    weights = [int((s.x_bits | s.z_bits).sum()) for s in xyz5.zy_checks]
    assert set(weights) <= {3, 4}
    # Z2Y checks at the left/right boundaries, Z3Y in the bulk
    assert weights.count(3) == 2 * (5 - 1)


def test_central_qubits_peripheral_counts(xyz5):
    for j, info in xyz5.central_qubits.items():
        assert info.k1 in (2, 3) and info.k2 in (2, 3)
        assert info.k1 == info.k2  # canonical row distribution pairs same-size checks
        c = xyz5.coords[j][1]
        expected = 2 if c in (0, 2 * 5 - 2) else 3
        assert info.k1 == expected


def test_logical_z_is_top_row_string(planar3):
    # weight-3 pure-Z string on the top lattice row
    lz = planar3.logical_z
    assert not lz.x_bits.any()
    support = np.nonzero(lz.z_bits)[0]
    assert len(support) == 3
    assert all(planar3.coords[j][0] == 0 for j in support)


def test_xyz_logical_z_on_y_free_row(xyz5):
    lz = xyz5.logical_z
    assert not lz.x_bits.any()
    rows = {xyz5.coords[j][0] for j in np.nonzero(lz.z_bits)[0]}
    assert len(rows) == 1
    (row,) = rows
    assert row % 4 != 2  # not a Y-carrying row


def test_logicals_anticommute(xyz7):
    assert symplectic_product(xyz7.logical_x, xyz7.logical_z) == 1


def test_every_stabilizer_pair_shares_even_anticommuting_overlap(xyz5):
    stabs = xyz5.stabilizers()
    for i, a in enumerate(stabs):
        for b in stabs[i + 1 :]:
            assert symplectic_product(a, b) == 0


def test_compute_logicals_rejects_rank_defect():
    # dropping a stabilizer leaves two encoded qubits
    lay = codes.build_planar(3)
    with pytest.raises(StructureError):
        codes.compute_logicals(lay.x_checks[:-1], lay.zy_checks, lay.n)


def test_validate_flags_moved_y(xyz3):
    # move one check's Y onto an unpaired qubit: commutation must break
    bad_zy = list(xyz3.zy_checks)
    s = bad_zy[0]
    x = s.x_bits.copy()
    z = s.z_bits.copy()
    y_pos = int(np.nonzero(x)[0][0])
    z_peris = [j for j in np.nonzero(z)[0] if j != y_pos]
    new_y = z_peris[0]
    x[y_pos] = 0
    x[new_y] = 1
    bad_zy[0] = PauliString(x, z)
    H_X, H_Y, H_Z = codes.check_matrices(xyz3.x_checks, bad_zy)
    tampered = dataclasses.replace(xyz3, zy_checks=bad_zy, H_X=H_X, H_Y=H_Y, H_Z=H_Z)
    report = codes.validate_layout(tampered)
    assert not report.is_valid
    assert any("anticommute" in p for p in report.problems)


def test_validate_flags_shifted_logical(xyz5):
    # move logical_z one row down onto the Y row: it anticommutes with ZY checks
    span = 2 * 5 - 1
    data = {tuple(c): j for j, c in enumerate(xyz5.coords)}
    row2 = [data[(2, c)] for c in range(0, span, 2)]
    shifted = PauliString.from_support(xyz5.n, zs=row2)
    tampered = dataclasses.replace(xyz5, logical_z=shifted)
    report = codes.validate_layout(tampered)
    assert any("logical_z" in p for p in report.problems)


def test_validate_flags_trivial_logical(planar3):
    stab = planar3.zy_checks[0]
    tampered = dataclasses.replace(planar3, logical_z=stab)
    report = codes.validate_layout(tampered)
    assert not report.is_valid


def test_json_round_trip(tmp_path, xyz5):
    path = tmp_path / "code.json"
    codes.save_json(xyz5, str(path))
    back = codes.load_json(str(path))
    assert back.kind == xyz5.kind and back.d == xyz5.d and back.n == xyz5.n
    assert np.array_equal(back.H_X, xyz5.H_X)
    assert np.array_equal(back.H_Y, xyz5.H_Y)
    assert np.array_equal(back.H_Z, xyz5.H_Z)
    assert back.logical_x == xyz5.logical_x
    assert back.logical_z == xyz5.logical_z
    assert back.central_qubits == xyz5.central_qubits
    assert codes.validate_layout(back).is_valid


def test_logical_times_stabilizer_stays_logical(xyz5):
    coset = multiply(xyz5.logical_z, xyz5.zy_checks[3])
    for s in xyz5.stabilizers():
        assert symplectic_product(coset, s) == 0
    assert symplectic_product(coset, xyz5.logical_x) == 1
