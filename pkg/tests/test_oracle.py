"""Dense exact unitary: the independent reference for the path pipeline."""
from __future__ import annotations

import pytest
from hypothesis import given, settings

from pathpoly import (
    AMP_ONE,
    AMP_ZERO,
    Amplitude,
    CapExceeded,
    Circuit,
    ExactMatrix,
    Gate,
    circuit_unitary,
    column_unitary,
    full_matrix,
    parse_circuit,
    place_toffoli,
)

from conftest import circuits


def col(tokens: str) -> list[Gate]:
    return [Gate.from_token(t) for t in tokens.split()]


def test_toffoli_column_swaps_basis_states():
    u = column_unitary(col("Iv Mv Av"), 3)
    for i in range(8):
        for j in range(8):
            if {i, j} == {6, 7}:
                assert u.entries[i][j] == AMP_ONE
            elif i == j and i not in (6, 7):
                assert u.entries[i][j] == AMP_ONE
            else:
                assert u.entries[i][j] == AMP_ZERO


def test_hadamard_column_is_h_tensor_identity():
    u = column_unitary(col("H I"), 2)
    r = Amplitude(1, 1)
    assert u.entries == (
        (r, AMP_ZERO, r, AMP_ZERO),
        (AMP_ZERO, r, AMP_ZERO, r),
        (r, AMP_ZERO, -r, AMP_ZERO),
        (AMP_ZERO, r, AMP_ZERO, -r),
    )


def test_identity_column():
    assert column_unitary(col("I I"), 2) == ExactMatrix.identity(4)


def test_ascending_chain_targets_top_row():
    # CNOT with control on row 2, target on row 1: flips the MSB when LSB set
    u = column_unitary(col("A^ I^"), 2)
    assert u.is_permutation()
    expected = {0: 0, 1: 3, 2: 2, 3: 1}
    for src, dst in expected.items():
        assert u.entries[dst][src] == AMP_ONE


def test_double_hadamard_cancels():
    c = parse_circuit("qubits 1\ncolumns 2\nH H\n")
    assert circuit_unitary(c) == ExactMatrix.identity(2)


def test_toffoli_only_circuit_is_permutation():
    c = place_toffoli(Circuit.empty(3, 2), 1, {1, 2}, 3)
    c = place_toffoli(c, 2, {3}, 1)
    u = circuit_unitary(c)
    assert u.is_permutation()


def test_hadamard_is_not_permutation():
    u = column_unitary(col("H"), 1)
    assert not u.is_permutation()


def test_columns_compose_left_to_right():
    c = parse_circuit("qubits 3\ncolumns 2\nI Iv\nIv Av\nAv I+\n")
    u = circuit_unitary(c)
    assert u == column_unitary(c.column(2), 3) @ column_unitary(c.column(1), 3)


def test_demo_circuit_matches_path_pipeline(demo_circuit):
    u = circuit_unitary(demo_circuit)
    assert u.report_rows() == full_matrix(demo_circuit)


def test_report_rows_is_transpose():
    u = column_unitary(col("A^ I^"), 2)
    rows = u.report_rows()
    for a in range(4):
        for b in range(4):
            assert rows[a][b] == u.entries[b][a]


def test_column_squares_to_identity():
    h = column_unitary(col("H"), 1)
    assert h @ h == ExactMatrix.identity(2)
    t = column_unitary(col("Iv Mv Av"), 3)
    assert t @ t == ExactMatrix.identity(8)


def test_matmul_requires_matching_dims():
    with pytest.raises(ValueError):
        ExactMatrix.identity(2) @ ExactMatrix.identity(4)


def test_qubit_cap():
    with pytest.raises(CapExceeded):
        circuit_unitary(Circuit.empty(11, 1))


@settings(max_examples=40, deadline=None)
@given(circuits(max_qubits=3, max_columns=5, max_h=8))
def test_exact_unitarity(c):
    u = circuit_unitary(c)
    assert u.transpose() @ u == ExactMatrix.identity(u.dim)


@settings(max_examples=30, deadline=None)
@given(circuits(max_qubits=3, max_columns=4, max_h=8))
def test_oracle_agrees_with_path_pipeline(c):
    assert circuit_unitary(c).report_rows() == full_matrix(c)
