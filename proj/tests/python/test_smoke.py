import json
import math

import numpy as np
import pytest

import qwire

HADAMARD = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def test_design_reproduces_hadamard_pair():
    a, b = qwire.design(HADAMARD, 1.0)
    r = 1 / math.sqrt(2)
    want_a = 0.5 * np.array([[1 - r, -r], [-r, 1 + r]])
    want_b = np.array([[1 + r, r], [r, 1 - r]]) / 2j
    np.testing.assert_allclose(a, want_a, atol=1e-12)
    np.testing.assert_allclose(b, want_b, atol=1e-12)
    np.testing.assert_allclose(qwire.scatter(a, b, 1.0), HADAMARD, atol=1e-12)


def test_scatter_matches_numpy():
    a, b = qwire.design(qwire.haar_random_unitary(4, 7), 1.0)
    c = np.random.default_rng(0).normal(size=(4, 4)) + 1j
    a, b = c @ a, c @ b
    for e in (0.5, 2.0, 9.0):
        k = math.sqrt(e)
        want = -np.linalg.solve(a + 1j * k * b, a - 1j * k * b)
        np.testing.assert_allclose(qwire.scatter(a, b, e), want, atol=1e-10)


def test_validate_and_errors():
    report = qwire.validate(np.zeros((2, 2)), np.zeros((2, 2)))
    assert not report["valid"]
    assert report["rank_found"] == 0
    with pytest.raises(qwire.SingularMatrixError):
        qwire.scatter(np.zeros((2, 2)), np.zeros((2, 2)), 1.0)
    with pytest.raises(qwire.UnitarityError):
        qwire.design(np.array([[1, 1], [0, 1]], dtype=complex), 1.0)
    with pytest.raises(qwire.ArgumentError):
        qwire.propagate(HADAMARD, 1.0, -2.0)
    assert issubclass(qwire.UnitarityError, qwire.Error)


def test_propagate_robin():
    phi = 0.8
    s = qwire.robin_smatrix([phi], 1.0)
    moved = qwire.propagate(s, 1.0, 4.0)
    k = 2.0
    want = -(math.cos(phi) - 1j * k * math.sin(phi)) / (math.cos(phi) + 1j * k * math.sin(phi))
    assert abs(moved[0, 0] - want) < 1e-12


def test_block_decompose_cnot():
    a, b = qwire.gate("cnot", 1.0)
    assert qwire.block_decompose(a, b, [0.25, 0.5, 1, 2, 4]) == [[0], [1], [2, 3]]


def test_recover_full():
    u = qwire.haar_random_unitary(4, 3)
    result = qwire.recover_full(u, 1.5)
    assert result["max_entry_error"] < 1e-6
    assert result["oracle_calls"] > 0
    np.testing.assert_allclose(result["recovered"], u, atol=1e-6)


def test_von_neumann():
    w = qwire.w_from_bc(np.zeros((2, 2)), np.eye(2))
    np.testing.assert_allclose(w, 1j * np.eye(2), atol=1e-14)
    a, b = qwire.design(qwire.haar_random_unitary(3, 1), 1.0)
    w = qwire.w_from_bc(a, b)
    for e in (0.3, 1.0, 10.0):
        np.testing.assert_allclose(qwire.s_from_w(w, e), qwire.scatter(a, b, e), atol=1e-10)


def test_star_product_unit_insertion():
    u = qwire.dress_with_line(np.array([[0, 1], [1, 0]], dtype=complex), 0.7, 2.0)
    s = 0.3 + 0.4j
    phase = np.exp(1j * math.sqrt(2.0) * 0.7)
    assert abs(qwire.insert_reflection(s, u) - phase**2 * s) < 1e-12


def test_read_matrix_file(tmp_path):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"kind": "smatrix", "n": 1, "energy": 2, "entries": [[[0, 1]]]}))
    loaded = qwire.read_matrix_file(str(path))
    assert loaded["kind"] == "smatrix"
    assert loaded["energy"] == 2
    assert loaded["matrices"][0][0, 0] == 1j
