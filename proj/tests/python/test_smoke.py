import numpy as np
import pytest

import qwit


def test_states_and_features():
    bell = qwit.bell_state(0, 0)
    assert bell.shape == (4,)
    rho = qwit.werner(bell, 1.0)
    f = qwit.feature_vector(rho)
    assert f.shape == (16,)
    assert f[0] == pytest.approx(1.0)
    back = qwit.reconstruct_state(2, f)
    assert np.max(np.abs(back.matrix - rho.matrix)) < 1e-12

    assert qwit.ppt_boundary(2) == pytest.approx(1 / 3)
    assert not qwit.is_ppt(rho, [2])
    assert qwit.is_ppt(qwit.werner(bell, 0.3), [2])


def test_partial_transpose_involution():
    rho = qwit.werner(qwit.ghz_state(3), 0.5)
    twice = qwit.partial_transpose(
        qwit.partial_transpose(rho.matrix, [2], 3), [2], 3
    )
    assert np.max(np.abs(twice - rho.matrix)) == 0


def test_reference_witness_detects_bell():
    w1 = qwit.reference_witness("w1")
    bell = qwit.DensityMatrix.checked(
        2, np.outer(qwit.bell_state(0, 0), qwit.bell_state(0, 0).conj())
    )
    assert w1.trace_with(bell) == pytest.approx(-0.4530, abs=2e-3)
    assert w1.min_eigenvalue() < 0
    assert set(qwit.reference_names()) == {"w1", "wghz", "ew22", "w4"}


def test_small_training_run():
    X, y = qwit.generate_dataset(2, per_class=150, seed=7)
    assert X.shape == (300, 16)
    result = qwit.build_witness(X, y, 2, seed=1)
    witness = result["witness"]
    assert witness.unit_trace

    report = qwit.verify_witness(witness, restarts=64, seed=2)
    assert report["valid"], report["failure"]

    threshold = qwit.detection_threshold(witness, qwit.ghz_state(2))
    assert threshold["detects"]
    assert threshold["crossing"] < 0.5


def test_witness_round_trip(tmp_path):
    w1 = qwit.reference_witness("w1")
    path = str(tmp_path / "w1.ew")
    qwit.write_witness(path, w1)
    back = qwit.read_witness(path)
    assert np.max(np.abs(back.coefficients - w1.coefficients)) == 0
